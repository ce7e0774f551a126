# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled chip-firing kernel; mirrors ``_pykernel.Kernel`` exactly."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef long long chip_t


cdef class Kernel:
    cdef public int n
    cdef int *ptr
    cdef int *idx
    cdef chip_t *mult
    cdef chip_t *buf
    cdef chip_t *cnt
    cdef chip_t *scr
    cdef chip_t *outv
    cdef char *burnt
    cdef int *stack
    cdef dict _layers
    cdef dict _memo

    def __cinit__(self, int n, nbrs, valence):
        cdef int total = 0, v, k
        self.n = n
        for a in nbrs:
            total += len(a)
        self.ptr = <int *> malloc((n + 1) * sizeof(int))
        self.idx = <int *> malloc((total + 1) * sizeof(int))
        self.mult = <chip_t *> malloc((total + 1) * sizeof(chip_t))
        self.buf = <chip_t *> malloc((n + 1) * sizeof(chip_t))
        self.cnt = <chip_t *> malloc((n + 1) * sizeof(chip_t))
        self.scr = <chip_t *> malloc((n + 1) * sizeof(chip_t))
        self.outv = <chip_t *> malloc((n + 1) * sizeof(chip_t))
        self.burnt = <char *> malloc((n + 1) * sizeof(char))
        self.stack = <int *> malloc((n + 1) * sizeof(int))
        if not (self.ptr and self.idx and self.mult and self.buf and self.cnt
                and self.scr and self.outv and self.burnt and self.stack):
            raise MemoryError()
        k = 0
        for v in range(n):
            self.ptr[v] = k
            for w, m in nbrs[v]:
                self.idx[k] = w
                self.mult[k] = m
                k += 1
        self.ptr[n] = k
        self._layers = {}
        self._memo = {}

    def __dealloc__(self):
        free(self.ptr); free(self.idx); free(self.mult); free(self.buf)
        free(self.cnt); free(self.scr); free(self.outv); free(self.burnt)
        free(self.stack)

    def clear_cache(self):
        self._memo.clear()

    cdef void _load(self, D):
        cdef int v
        for v in range(self.n):
            self.buf[v] = D[v]

    cdef tuple _dump(self, chip_t *arr):
        return tuple([arr[v] for v in range(self.n)])

    cdef void _burn(self, chip_t *D, int q):
        # leaves self.burnt[v] = 1 for burnt vertices
        cdef int top = 0, u, w, k
        cdef chip_t c
        memset(self.burnt, 0, self.n)
        memset(self.cnt, 0, self.n * sizeof(chip_t))
        self.burnt[q] = 1
        self.stack[top] = q
        top = 1
        while top:
            top -= 1
            u = self.stack[top]
            for k in range(self.ptr[u], self.ptr[u + 1]):
                w = self.idx[k]
                if not self.burnt[w]:
                    c = self.cnt[w] + self.mult[k]
                    self.cnt[w] = c
                    if c > D[w]:
                        self.burnt[w] = 1
                        self.stack[top] = w
                        top += 1

    def burnt_mask(self, D, int q):
        self._load(D)
        self._burn(self.buf, q)
        return [bool(self.burnt[v]) for v in range(self.n)]

    def unburnt(self, D, int q):
        self._load(D)
        self._burn(self.buf, q)
        return [v for v in range(self.n) if not self.burnt[v]]

    cdef bint _superstable(self, chip_t *c, int q):
        cdef int v
        self._burn(c, q)
        for v in range(self.n):
            if not self.burnt[v]:
                return False
        return True

    def is_superstable(self, c, int q):
        self._load(c)
        return self._superstable(self.buf, q)

    def _layers_for(self, int q):
        lay = self._layers.get(q)
        if lay is None:
            n = self.n
            dist = [-1] * n
            dist[q] = 0
            order = [q]
            head = 0
            while head < len(order):
                u = order[head]
                head += 1
                for k in range(self.ptr[u], self.ptr[u + 1]):
                    w = self.idx[k]
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        order.append(w)
            layers = [[] for _ in range(max(dist) + 1)]
            for v in order:
                layers[dist[v]].append(v)
            lay = (dist, layers)
            self._layers[q] = lay
        return lay

    cdef void _reduce(self, chip_t *D, int q, bint track):
        cdef int n = self.n, v, u, w, k, j, kk
        cdef chip_t t, e, need, o, best
        cdef bint any_s
        dist, layers = self._layers_for(q)
        cdef list dl = dist
        if track:
            memset(self.scr, 0, n * sizeof(chip_t))

        for kk in range(len(layers) - 1, 0, -1):
            t = 0
            for v in layers[kk]:
                if D[v] < 0:
                    e = 0
                    for k in range(self.ptr[v], self.ptr[v + 1]):
                        if <int> dl[self.idx[k]] == kk - 1:
                            e += self.mult[k]
                    need = (-D[v] + e - 1) // e
                    if need > t:
                        t = need
            if t:
                for u in layers[kk - 1]:
                    for k in range(self.ptr[u], self.ptr[u + 1]):
                        w = self.idx[k]
                        if <int> dl[w] == kk:
                            D[u] -= t * self.mult[k]
                            D[w] += t * self.mult[k]
                if track:
                    for j in range(kk):
                        for u in layers[j]:
                            self.scr[u] += t

        while True:
            self._burn(D, q)
            any_s = False
            best = -1
            for v in range(n):
                if self.burnt[v]:
                    continue
                any_s = True
                o = 0
                for k in range(self.ptr[v], self.ptr[v + 1]):
                    if self.burnt[self.idx[k]]:
                        o += self.mult[k]
                self.outv[v] = o
                if o:
                    if best < 0 or D[v] // o < best:
                        best = D[v] // o
            if not any_s:
                break
            t = best
            for v in range(n):
                if self.burnt[v]:
                    continue
                o = self.outv[v]
                if o:
                    D[v] -= t * o
                    for k in range(self.ptr[v], self.ptr[v + 1]):
                        w = self.idx[k]
                        if self.burnt[w]:
                            D[w] += t * self.mult[k]
                if track:
                    self.scr[v] += t

    def reduce(self, D, int q, bint want_script=True):
        self._load(D)
        self._reduce(self.buf, q, want_script)
        red = self._dump(self.buf)
        return red, (self._dump(self.scr) if want_script else None)

    def reduced(self, D, int q):
        self._load(D)
        self._reduce(self.buf, q, False)
        return self._dump(self.buf)

    def superstables(self, int q, chip_t max_deg):
        cdef int n = self.n, nf, i, v
        cdef chip_t deg = 0
        cdef chip_t *c = <chip_t *> malloc(n * sizeof(chip_t))
        cdef int *free_v = <int *> malloc(n * sizeof(int))
        out = []
        memset(c, 0, n * sizeof(chip_t))
        nf = 0
        for v in range(n):
            if v != q:
                free_v[nf] = v
                nf += 1
        # iterative DFS over coordinates; coordinate i is raised until the
        # configuration stops being superstable or the degree cap is hit
        i = 0
        try:
            while True:
                if i == nf:
                    out.append(tuple([c[v] for v in range(n)]))
                    i -= 1
                    if i < 0:
                        break
                    # advance coordinate i
                    while True:
                        v = free_v[i]
                        c[v] += 1
                        deg += 1
                        if deg <= max_deg and self._superstable(c, q):
                            i += 1
                            break
                        deg -= c[v]
                        c[v] = 0
                        i -= 1
                        if i < 0:
                            break
                    if i < 0:
                        break
                else:
                    i += 1
        finally:
            free(c)
            free(free_v)
        return out

    def rank_at_least(self, D, int r, int hint=0):
        cdef int v
        if r < 0:
            return True
        self._load(D)
        self._reduce(self.buf, 0, False)
        if self.buf[0] < 0:
            return False
        if r == 0:
            return True
        R = self._dump(self.buf)
        key = (R, r)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        ok = True
        lst = list(R)
        order = [hint] + [u for u in range(self.n) if u != hint]
        for v in order:
            lst[v] -= 1
            good = self.rank_at_least(lst, r - 1, v)
            lst[v] += 1
            if not good:
                ok = False
                break
        self._memo[key] = ok
        return ok
