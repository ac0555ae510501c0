# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled monomial reducer; same contract as ``_pyreduce.Reducer``."""

from libcpp.vector cimport vector
from libcpp.algorithm cimport sort


cdef class Reducer:
    cdef public int nvars
    cdef vector[int] lstart, lvar, lexp
    cdef vector[int] tstart, tvar, texp
    cdef vector[vector[int]] buckets   # rule indices keyed by the lead's top variable
    cdef vector[int] counts
    cdef vector[char] marked
    cdef vector[int] present
    cdef public list leads, trails

    def __cinit__(self, int nvars):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        self.lstart.push_back(0)
        self.tstart.push_back(0)
        self.buckets.resize(nvars)
        self.counts.resize(nvars, 0)
        self.marked.resize(nvars, 0)
        self.leads = []
        self.trails = []

    def __len__(self):
        return len(self.leads)

    cdef int _check(self, tuple word) except -1:
        cdef int v
        for x in word:
            v = x
            if v < 0 or v >= self.nvars:
                raise ValueError(f"rank {v} out of range for {self.nvars} variables")
        return 0

    cdef void _push_sparse(self, tuple word, vector[int]& var, vector[int]& exp, vector[int]& start):
        cdef int v
        cdef int prev = -1
        for x in word:
            v = x
            if v == prev:
                exp[exp.size() - 1] += 1
            else:
                var.push_back(v)
                exp.push_back(1)
                prev = v
        start.push_back(<int>var.size())

    def add(self, lead, trail):
        cdef tuple ld = tuple(lead)
        cdef tuple tr = tuple(trail)
        if not ld:
            raise ValueError("a rule needs a nonconstant lead")
        self._check(ld)
        self._check(tr)
        idx = len(self.leads)
        self._push_sparse(ld, self.lvar, self.lexp, self.lstart)
        self._push_sparse(tr, self.tvar, self.texp, self.tstart)
        self.buckets[<int>ld[0]].push_back(idx)
        self.leads.append(ld)
        self.trails.append(tr)
        return idx

    cdef inline void _bump(self, int v, int e):
        if not self.marked[v]:
            self.marked[v] = 1
            self.present.push_back(v)
        self.counts[v] += e

    cdef void _load(self, tuple word):
        cdef int v
        for x in word:
            v = x
            self._bump(v, 1)

    cdef inline bint _divides(self, int idx):
        cdef int t
        for t in range(self.lstart[idx], self.lstart[idx + 1]):
            if self.counts[self.lvar[t]] < self.lexp[t]:
                return False
        return True

    cdef int _find_loaded(self):
        cdef int best = -1
        cdef size_t k, b
        cdef int v, idx
        for k in range(self.present.size()):
            v = self.present[k]
            if self.counts[v] == 0:
                continue
            for b in range(self.buckets[v].size()):
                idx = self.buckets[v][b]
                if best >= 0 and idx >= best:
                    break
                if self._divides(idx):
                    best = idx
                    break
        return best

    cdef void _apply(self, int idx):
        cdef int t
        for t in range(self.lstart[idx], self.lstart[idx + 1]):
            self.counts[self.lvar[t]] -= self.lexp[t]
        for t in range(self.tstart[idx], self.tstart[idx + 1]):
            self._bump(self.tvar[t], self.texp[t])

    cdef tuple _unload(self):
        cdef vector[int] live
        cdef size_t k
        cdef int v, e, i
        for k in range(self.present.size()):
            v = self.present[k]
            if self.counts[v] > 0:
                live.push_back(v)
        sort(live.begin(), live.end())
        out = []
        for k in range(live.size()):
            v = live[live.size() - 1 - k]
            e = self.counts[v]
            for i in range(e):
                out.append(v)
        for k in range(self.present.size()):
            v = self.present[k]
            self.counts[v] = 0
            self.marked[v] = 0
        self.present.clear()
        return tuple(out)

    def find(self, word):
        cdef tuple w = tuple(word)
        self._check(w)
        self._load(w)
        cdef int best = self._find_loaded()
        self._unload()
        return best

    def normal_form(self, word):
        cdef tuple w = tuple(word)
        cdef int idx
        self._check(w)
        self._load(w)
        while True:
            idx = self._find_loaded()
            if idx < 0:
                break
            self._apply(idx)
        return self._unload()

    def normal_forms(self, words):
        return [self.normal_form(w) for w in words]
