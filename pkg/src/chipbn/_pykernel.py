"""Pure-Python chip-firing kernel.

Same interface as the compiled ``_ckernel.Kernel``; used when the extension
is not built or when ``CHIPBN_PURE=1`` is set. Divisors enter as sequences of
ints and leave as tuples. Loops are invisible here: callers pass loop-free
adjacency and the loop-free valence.
"""
from __future__ import annotations

from collections import deque


class Kernel:
    def __init__(self, n, nbrs, valence):
        self.n = n
        self.nbrs = [list(a) for a in nbrs]
        self.valence = list(valence)
        self._layers = {}
        self._memo = {}

    def clear_cache(self):
        self._memo.clear()

    # -- burning ---------------------------------------------------------

    def burnt_mask(self, D, q):
        n = self.n
        burnt = [False] * n
        cnt = [0] * n
        burnt[q] = True
        queue = [q]
        nbrs = self.nbrs
        while queue:
            u = queue.pop()
            for w, m in nbrs[u]:
                if not burnt[w]:
                    c = cnt[w] + m
                    cnt[w] = c
                    if c > D[w]:
                        burnt[w] = True
                        queue.append(w)
        return burnt

    def unburnt(self, D, q):
        burnt = self.burnt_mask(D, q)
        return [v for v in range(self.n) if not burnt[v]]

    def is_superstable(self, c, q):
        return all(self.burnt_mask(c, q))

    # -- reduction -------------------------------------------------------

    def _layers_for(self, q):
        lay = self._layers.get(q)
        if lay is None:
            dist = [-1] * self.n
            dist[q] = 0
            order = [q]
            dq = deque([q])
            while dq:
                u = dq.popleft()
                for w, _ in self.nbrs[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        order.append(w)
                        dq.append(w)
            layers = [[] for _ in range(max(dist) + 1)]
            for v in order:
                layers[dist[v]].append(v)
            lay = (dist, layers)
            self._layers[q] = lay
        return lay

    def reduce(self, D, q, want_script=True):
        """q-reduced form of D and the net firing script that produced it."""
        D = list(D)
        n = self.n
        nbrs = self.nbrs
        script = [0] * n if want_script else None
        dist, layers = self._layers_for(q)

        # make D nonnegative away from q: fire the ball of radius k-1 around q
        # until layer k is out of debt, working outward-in
        for k in range(len(layers) - 1, 0, -1):
            t = 0
            for v in layers[k]:
                if D[v] < 0:
                    e = 0
                    for w, m in nbrs[v]:
                        if dist[w] == k - 1:
                            e += m
                    need = (-D[v] + e - 1) // e
                    if need > t:
                        t = need
            if t:
                for u in layers[k - 1]:
                    for w, m in nbrs[u]:
                        if dist[w] == k:
                            D[u] -= t * m
                            D[w] += t * m
                if script is not None:
                    for j in range(k):
                        for u in layers[j]:
                            script[u] += t

        # fire maximal legal sets until Dhar burns everything
        while True:
            burnt = self.burnt_mask(D, q)
            S = [v for v in range(n) if not burnt[v]]
            if not S:
                break
            t = None
            out = {}
            for v in S:
                o = 0
                for w, m in nbrs[v]:
                    if burnt[w]:
                        o += m
                out[v] = o
                if o:
                    k = D[v] // o
                    if t is None or k < t:
                        t = k
            for v in S:
                o = out[v]
                if o:
                    D[v] -= t * o
                    for w, m in nbrs[v]:
                        if burnt[w]:
                            D[w] += t * m
                if script is not None:
                    script[v] += t
        return tuple(D), (tuple(script) if script is not None else None)

    def reduced(self, D, q):
        return self.reduce(D, q, False)[0]

    # -- enumeration -----------------------------------------------------

    def superstables(self, q, max_deg):
        """All superstable configurations of degree <= max_deg, DFS order.

        Superstability is closed downward, so each coordinate is raised until
        the first failure.
        """
        n = self.n
        free = [v for v in range(n) if v != q]
        c = [0] * n
        out = []

        def rec(i, deg):
            if i == len(free):
                out.append(tuple(c))
                return
            v = free[i]
            k = 0
            while deg + k <= max_deg:
                c[v] = k
                if k and not self.is_superstable(c, q):
                    break
                rec(i + 1, deg + k)
                k += 1
            c[v] = 0

        rec(0, 0)
        return out

    # -- rank ------------------------------------------------------------

    def rank_at_least(self, D, r, hint=0):
        """True iff every effective E of degree r leaves D - E effective-equivalent."""
        if r < 0:
            return True
        R = self.reduced(D, 0)
        if R[0] < 0:
            return False
        if r == 0:
            return True
        key = (R, r)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        ok = True
        lst = list(R)
        for v in [hint] + [u for u in range(self.n) if u != hint]:
            lst[v] -= 1
            good = self.rank_at_least(lst, r - 1, v)
            lst[v] += 1
            if not good:
                ok = False
                break
        self._memo[key] = ok
        return ok
