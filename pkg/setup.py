import os

from setuptools import Extension, setup

# The compiled forest kernel is optional: set EULERSTREAM_PURE=1 to install
# the pure-Python build (the package falls back automatically at import).
ext_modules = []
if not os.environ.get("EULERSTREAM_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "eulerstream._forest",
                    ["src/eulerstream/_forest.pyx"],
                    language="c++",
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
