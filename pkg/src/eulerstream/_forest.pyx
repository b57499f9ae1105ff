# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``cycle_forest.InternalGraph`` (the hot kernel).

Behaviour matches the pure-Python class exactly: the extracted cycle is the
unique tree path from the inserted edge's second endpoint to its first, so
both backends return byte-identical results.
"""

from libcpp.vector cimport vector


cdef class InternalGraph:
    cdef int _n
    cdef int epoch
    cdef vector[vector[int]] adj
    cdef vector[int] stamp_a
    cdef vector[int] stamp_b
    cdef vector[int] par_a
    cdef vector[int] par_b
    cdef vector[int] stack_a
    cdef vector[int] stack_b
    cdef public long live_edge_count
    cdef public long peak_edge_count

    def __cinit__(self, int n):
        if n < 1:
            raise ValueError("node count must be >= 1")
        self._n = n
        self.epoch = 0
        self.adj.resize(n + 1)
        self.stamp_a.assign(n + 1, 0)
        self.stamp_b.assign(n + 1, 0)
        self.par_a.assign(n + 1, 0)
        self.par_b.assign(n + 1, 0)
        self.live_edge_count = 0
        self.peak_edge_count = 0

    @property
    def n(self):
        return self._n

    @property
    def backend(self):
        return "c"

    def insert_edge(self, int u, int v):
        if u < 1 or u > self._n or v < 1 or v > self._n:
            raise ValueError("node id out of range")
        if u == v:
            raise ValueError("self-loop unsupported")
        if self.live_edge_count + 1 > self.peak_edge_count:
            self.peak_edge_count = self.live_edge_count + 1
        path = self._tree_path(v, u)
        if path is None:
            self.adj[u].push_back(v)
            self.adj[v].push_back(u)
            self.live_edge_count += 1
            return None
        if len(path) == 2:
            raise ValueError("edge already present")
        cdef int i, a, b
        for i in range(len(path) - 1):
            a = path[i]
            b = path[i + 1]
            self._drop(a, b)
            self._drop(b, a)
        self.live_edge_count -= len(path) - 1
        return path

    cdef object _tree_path(self, int src, int dst):
        cdef int ep, x, y, i
        cdef bint found_a = False
        cdef bint found_b = False
        if self.adj[src].size() == 0 or self.adj[dst].size() == 0:
            return None
        self.epoch += 1
        ep = self.epoch
        self.stack_a.clear()
        self.stack_b.clear()
        self.stamp_a[src] = ep
        self.stamp_b[dst] = ep
        self.stack_a.push_back(src)
        self.stack_b.push_back(dst)
        while self.stack_a.size() > 0 and self.stack_b.size() > 0:
            x = self.stack_a.back()
            self.stack_a.pop_back()
            for i in range(<int> self.adj[x].size()):
                y = self.adj[x][i]
                if self.stamp_a[y] != ep:
                    self.stamp_a[y] = ep
                    self.par_a[y] = x
                    if y == dst:
                        found_a = True
                        break
                    self.stack_a.push_back(y)
            if found_a:
                break
            x = self.stack_b.back()
            self.stack_b.pop_back()
            for i in range(<int> self.adj[x].size()):
                y = self.adj[x][i]
                if self.stamp_b[y] != ep:
                    self.stamp_b[y] = ep
                    self.par_b[y] = x
                    if y == src:
                        found_b = True
                        break
                    self.stack_b.push_back(y)
            if found_b:
                break
        cdef list chain
        if found_a:
            chain = [dst]
            x = dst
            while x != src:
                x = self.par_a[x]
                chain.append(x)
            chain.reverse()
            return chain
        if found_b:
            chain = [src]
            x = src
            while x != dst:
                x = self.par_b[x]
                chain.append(x)
            return chain
        return None

    cdef void _drop(self, int a, int b):
        cdef size_t i
        cdef size_t last = self.adj[a].size() - 1
        for i in range(self.adj[a].size()):
            if self.adj[a][i] == b:
                self.adj[a][i] = self.adj[a][last]
                self.adj[a].pop_back()
                return

    def contains_edge(self, int u, int v):
        cdef size_t i
        for i in range(self.adj[u].size()):
            if self.adj[u][i] == v:
                return True
        return False

    def remaining_edges(self):
        out = set()
        cdef int x, i, y
        for x in range(1, self._n + 1):
            for i in range(<int> self.adj[x].size()):
                y = self.adj[x][i]
                if x < y:
                    out.add((x, y))
        return out
