"""
Finitely presented groups: words as tuples of signed 1-based generator
indices, HLT-style Todd-Coxeter coset enumeration with coincidence handling,
and greedy Tietze simplification.
"""


def inverse_word(w):
    return tuple(-x for x in reversed(w))


def free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w):
    w = list(free_reduce(w))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


class Presentation:
    """<x_1..x_n | relators>; words are tuples of nonzero ints, sign for
    inversion."""

    def __init__(self, ngens, relators):
        self.ngens = ngens
        self.relators = [cyclic_reduce(r) for r in relators]
        self.relators = [r for r in self.relators if r]

    def __repr__(self):
        return "Presentation(%d gens, %d relators)" % (self.ngens,
                                                       len(self.relators))

    def abelianization_matrix(self):
        """Exponent-sum matrix, one row per relator."""
        rows = []
        for r in self.relators:
            row = [0] * self.ngens
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return rows


def simplify_presentation(pres, tracked_words=(), budget=10000):
    """Greedy Tietze simplification: drop trivial relators, eliminate any
    generator occurring exactly once in some relator (shortest such relator
    first), keep `tracked_words` rewritten through the eliminations.

    Returns (presentation, tracked, moves_used).  Deterministic.
    """
    relators = [list(cyclic_reduce(r)) for r in pres.relators]
    relators = [r for r in relators if r]
    tracked = [list(free_reduce(w)) for w in tracked_words]
    alive = set(range(1, pres.ngens + 1))
    moves = 0

    def substitute(target, g, repl):
        out = []
        for x in target:
            if x == g:
                out.extend(repl)
            elif x == -g:
                out.extend(inverse_word(tuple(repl)))
            else:
                out.append(x)
        return list(free_reduce(tuple(out)))

    changed = True
    while changed and moves < budget:
        changed = False
        relators = [list(cyclic_reduce(tuple(r))) for r in relators]
        relators = [r for r in relators if r]
        relators.sort(key=lambda r: (len(r), r))
        # find a generator with a single occurrence in some relator
        for ri, r in enumerate(relators):
            counts = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            single = sorted(g for g, c in counts.items() if c == 1)
            if not single:
                continue
            g = single[0]
            # rotate r so the g-letter comes first; g = (rest)^-1
            pos = next(i for i, x in enumerate(r) if abs(x) == g)
            rot = r[pos:] + r[:pos]
            if rot[0] == g:
                repl = list(inverse_word(tuple(rot[1:])))
            else:
                repl = list(rot[1:])
            del relators[ri]
            relators = [substitute(r2, g, repl) for r2 in relators]
            tracked = [substitute(w, g, repl) for w in tracked]
            alive.discard(g)
            moves += 1
            changed = True
            break
    # compact generator numbering
    remap = {}
    for g in sorted(alive):
        remap[g] = len(remap) + 1

    def renumber(w):
        return tuple((remap[abs(x)] * (1 if x > 0 else -1)) for x in w)

    out = Presentation(len(remap), [renumber(tuple(r)) for r in relators])
    return out, [renumber(tuple(w)) for w in tracked], moves


class CosetTable:
    """Todd-Coxeter coset table for a subgroup H <= G given by words.

    Cosets are integers, 0 = H.  `complete` is True when the enumeration
    closed within the limit; a partial table still answers `coset_of` for
    words whose path is defined, and any coincidence it reports is a genuine
    consequence of the relations.
    """

    def __init__(self, pres, subgroup_words, limit=10000):
        self.pres = pres
        self.limit = limit
        self.complete = False
        self.ngens = pres.ngens
        self.tab = [{}]          # coset -> {signed gen: coset}
        self.p = [0]             # union-find over cosets
        self.subgroup_words = [free_reduce(w) for w in subgroup_words]
        self._enumerate()

    # -- union-find -----------------------------------------------------------

    def _rep(self, a):
        while self.p[a] != a:
            self.p[a] = self.p[self.p[a]]
            a = self.p[a]
        return a

    def _is_alive(self, a):
        return self.p[a] == a

    # -- core -----------------------------------------------------------------

    def _define(self, a, x):
        if len(self.tab) >= self.limit:
            raise _TableLimit()
        b = len(self.tab)
        self.tab.append({})
        self.p.append(b)
        self.tab[a][x] = b
        self.tab[b][-x] = a
        return b

    def _scan_and_fill(self, a, word):
        """Scan `word` at coset a, filling gaps, processing coincidences."""
        while True:
            a = self._rep(a)
            f, i = a, 0
            n = len(word)
            while i < n:
                f2 = self.tab[self._rep(f)].get(word[i])
                if f2 is None:
                    break
                f = self._rep(f2)
                i += 1
            if i == n:
                if f != a:
                    self._coincide(f, a)
                return
            b, j = a, n - 1
            while j >= i:
                b2 = self.tab[self._rep(b)].get(-word[j])
                if b2 is None:
                    break
                b = self._rep(b2)
                j -= 1
            if j < i:
                if b != f:
                    self._coincide(b, f)
                return
            if i == j:
                # single gap: deduction
                x = word[i]
                fa, ba = self._rep(f), self._rep(b)
                old = self.tab[fa].get(x)
                if old is not None:
                    self._coincide(self._rep(old), ba)
                else:
                    self.tab[fa][x] = ba
                    self.tab[ba][-x] = fa
                return
            # wide gap: define one coset and rescan
            self._define(self._rep(f), word[i])

    def _coincide(self, a, b):
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            a, b = self._rep(a), self._rep(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            self.p[b] = a
            moved = self.tab[b]
            self.tab[b] = {}
            for x, c in moved.items():
                c = self._rep(c)
                cur = self.tab[a].get(x)
                if cur is None:
                    self.tab[a][x] = c
                    back = self.tab[c].get(-x)
                    if back is None:
                        self.tab[c][-x] = a
                    elif self._rep(back) != a:
                        queue.append((back, a))
                elif self._rep(cur) != c:
                    queue.append((cur, c))

    def _enumerate(self):
        try:
            for w in self.subgroup_words:
                if w:
                    self._scan_and_fill(0, w)
            # HLT main loop
            a = 0
            while a < len(self.tab):
                if self._is_alive(a):
                    for r in self.pres.relators:
                        self._scan_and_fill(a, r)
                        if not self._is_alive(a):
                            break
                    if self._is_alive(a):
                        for g in range(1, self.ngens + 1):
                            for x in (g, -g):
                                if x not in self.tab[self._rep(a)]:
                                    self._define(self._rep(a), x)
                a += 1
            self.complete = True
        except _TableLimit:
            self.complete = False

    # -- queries ----------------------------------------------------------------

    @property
    def sheets(self):
        """Number of live cosets (the index, when complete)."""
        return sum(1 for a in range(len(self.tab)) if self._is_alive(a))

    def live_cosets(self):
        return [a for a in range(len(self.tab)) if self._is_alive(a)]

    def act(self, coset, word):
        """Coset after applying `word`, or None if the path is undefined."""
        a = self._rep(coset)
        for x in word:
            nxt = self.tab[a].get(x)
            if nxt is None:
                return None
            a = self._rep(nxt)
        return a

    def coset_of(self, word):
        return self.act(0, word)

    def in_subgroup(self, word):
        """True/False when decidable from the current table, None otherwise.

        A True answer is sound even on a partial table (coincidences are
        consequences); a False answer is only sound when complete.
        """
        c = self.coset_of(word)
        if c == 0:
            return True
        if c is None or not self.complete:
            return None
        return False


class _TableLimit(Exception):
    pass
