"""Proof-carrying Tietze toolkit used to author the shipped move scripts.

Words are tuples of nonzero ints: +k / -k is generator k-1 or its inverse.
A Proof pairs a freely reduced word with derivation steps (rel, conj, sign)
whose product of conjugates freely equals the word. Most reasoning happens in
the free product of Z/2's (involution generators) and Z's (the rest); square
relators of the involutions bridge back to the free group.
"""

from __future__ import annotations

import json
from collections import deque


def red(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inv(w):
    return tuple(-x for x in reversed(w))


def cyc_red(w):
    w = red(w)
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == -w[hi - 1]:
        lo += 1
        hi -= 1
    return w[lo:hi]


class Proof:
    def __init__(self, word=(), steps=()):
        self.word = red(word)
        self.steps = list(steps)

    @staticmethod
    def rel(pres, i):
        return Proof(pres.rels[i], [(i, (), 1)])

    def __mul__(self, other):
        return Proof(self.word + other.word, self.steps + other.steps)

    def inverse(self):
        return Proof(inv(self.word), [(i, c, -s) for (i, c, s) in reversed(self.steps)])

    def conj(self, c):
        c = red(c)
        return Proof(c + self.word + inv(c), [(i, red(c + ci), s) for (i, ci, s) in self.steps])

    def uses(self, i):
        return any(r == i for (r, _, _) in self.steps)


def evaluate(pres, steps):
    out = ()
    for (i, c, s) in steps:
        r = pres.rels[i] if s > 0 else inv(pres.rels[i])
        out = red(out + c + r + inv(c))
    return out


def product(proofs):
    out = Proof()
    for p in proofs:
        out = out * p
    return out


class Presentation:
    def __init__(self, names, rels):
        self.names = list(names)
        self.rels = [cyc_red(r) for r in rels]

    def copy(self):
        return Presentation(self.names, self.rels)

    def gen(self, name):
        return self.names.index(name) + 1

    def render_word(self, w):
        if not w:
            return "1"
        parts = []
        for x in w:
            name = self.names[abs(x) - 1]
            parts.append(name if x > 0 else name + "^-1")
        return "*".join(parts)

    def render(self):
        return "< " + ", ".join(self.names) + " | " + ", ".join(self.render_word(r) for r in self.rels) + " >"


def parse_word(text, names):
    """Tiny parser for the product/power grammar, enough for authoring."""
    pos = 0
    text = text.replace(" ", "")

    def product_():
        nonlocal pos
        out = factor()
        while pos < len(text) and text[pos] == "*":
            pos += 1
            out = out + factor()
        return out

    def factor():
        nonlocal pos
        base = atom()
        while pos < len(text) and text[pos] == "^":
            pos += 1
            start = pos
            if text[pos] == "-":
                pos += 1
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            k = int(text[start:pos])
            base = base * k if k >= 0 else inv(base) * (-k)
        return red(base)

    def atom():
        nonlocal pos
        if text[pos] == "(":
            pos += 1
            w = product_()
            pos += 1
            return w
        if text[pos] == "1" and (pos + 1 == len(text) or not text[pos + 1].isalnum()):
            pos += 1
            return ()
        start = pos
        while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
            pos += 1
        return (names.index(text[start:pos]) + 1,)

    return red(product_())


def parse_presentation(text):
    body = text.strip()[1:-1]
    gens, rels = body.split("|")
    names = [g.strip() for g in gens.split(",") if g.strip()]
    words = [parse_word(r, names) for r in rels.split(",") if r.strip()]
    return Presentation(names, words)


# ---------------------------------------------------------------------------
# Free product of Z/2's (involutions) and Z's.


class Algebra:
    def __init__(self, pres, involutions):
        """Each involution x must have the relator x^2 in pres whenever a proof is built."""
        self.pres = pres
        self.invol = set(involutions)

    def square(self, x):
        return Proof.rel(self.pres, self.pres.rels.index((x, x)))

    def letter(self, x):
        return abs(x) if abs(x) in self.invol else x

    def cancels(self, a, b):
        return a == b if abs(a) in self.invol else a == -b

    def norm(self, w):
        out = []
        for x in w:
            x = self.letter(x)
            if out and self.cancels(out[-1], x):
                out.pop()
            else:
                out.append(x)
        return tuple(out)

    def finv(self, w):
        return tuple(self.letter(-x) for x in reversed(w))

    def cyc(self, w):
        w = self.norm(w)
        lo, hi = 0, len(w)
        while hi - lo >= 2 and self.cancels(w[lo], w[hi - 1]):
            lo += 1
            hi -= 1
        return w[:lo], w[lo:hi]

    def sq_proof(self, w):
        """Proof of a word that is trivial in the free product."""
        start = red(w)
        cur = list(start)
        factors = []
        while cur:
            i = next((k for k, x in enumerate(cur) if x < 0 and -x in self.invol), None)
            if i is not None:
                x = -cur[i]
                a = tuple(cur[:i])
                factors.append(self.square(x).inverse().conj(a))
                cur = list(red(a + (x,) + tuple(cur[i + 1:])))
                continue
            i = next((k for k in range(len(cur) - 1) if cur[k] == cur[k + 1] and cur[k] in self.invol), None)
            if i is None:
                raise ValueError("word is not trivial in the free product: %r" % (cur,))
            x = cur[i]
            a = tuple(cur[:i])
            factors.append(self.square(x).conj(a))
            cur = list(red(a + tuple(cur[i + 2:])))
        p = product(factors)
        assert p.word == start, (p.word, start)
        return p

    def derive(self, target, proof):
        """Proof of `target`, which must be conjugate to proof.word^(+-1) in the free product."""
        target = red(target)
        p1, c1 = self.cyc(target)
        if not c1:
            return self.sq_proof(target)
        p2, c2 = self.cyc(proof.word)
        if len(c1) == len(c2):
            for sign, base in ((1, c2), (-1, self.finv(c2))):
                for k in range(len(base)):
                    if base[k:] + base[:k] == c1:
                        conj = red(p1 + self.finv(base[:k]) + self.finv(p2))
                        q = (proof if sign > 0 else proof.inverse()).conj(conj)
                        rest = self.sq_proof(target + inv(q.word))
                        out = rest * q
                        assert out.word == target
                        return out
        raise ValueError("target %r is not conjugate to %r" % (c1, c2))


class Chain:
    """Equational rewriting from `start` down to the identity."""

    def __init__(self, alg, start):
        self.alg = alg
        self.start = red(start)
        self.cur = tuple(self.start)
        self.factors = []

    def to(self, w):
        w = tuple(w)
        if self.alg.norm(w) != self.alg.norm(self.cur):
            raise ValueError("to(): %r is not equal to %r" % (w, self.cur))
        self.cur = w
        return self

    def normalize(self):
        return self.to(self.alg.norm(self.cur))

    def find(self, pattern, occurrence=0):
        pattern = tuple(pattern)
        seen = 0
        for i in range(len(self.cur) - len(pattern) + 1):
            if self.cur[i:i + len(pattern)] == pattern:
                if seen == occurrence:
                    return i
                seen += 1
        raise ValueError("pattern %r not found in %r" % (pattern, self.cur))

    def rw(self, lhs, rhs, proof, at=None):
        """Replace lhs by rhs, justified by a proof conjugate to lhs*rhs^-1."""
        lhs, rhs = tuple(lhs), tuple(rhs)
        i = self.find(lhs) if at is None else at
        assert self.cur[i:i + len(lhs)] == lhs
        a = self.cur[:i]
        self.factors.append(self.alg.derive(lhs + inv(rhs), proof).conj(a))
        self.cur = a + rhs + self.cur[i + len(lhs):]
        return self

    def rw_all(self, lhs, rhs, proof):
        while True:
            try:
                self.rw(lhs, rhs, proof)
            except ValueError:
                return self

    def close(self, proof=None):
        if proof is not None:
            self.factors.append(self.alg.derive(self.cur, proof))
            self.cur = ()
        total = product(self.factors)
        rest = self.alg.sq_proof(self.start + inv(total.word))
        out = rest * total
        assert out.word == self.start
        return out


# ---------------------------------------------------------------------------
# Coxeter word problem by braid moves.


def alternating(s, t, m):
    return tuple(s if k % 2 == 0 else t for k in range(m))


def coxeter_prove(alg, word, braids, limit=200000):
    """Proof of `word`, assumed trivial in the Coxeter group whose finite labels are
    braids[(s, t)] = (m, proof of (st)^m) for unordered pairs s < t."""
    chain = Chain(alg, word)
    while True:
        chain.normalize()
        if not chain.cur:
            return chain.close()
        path = _braid_search(chain.cur, braids, limit)
        if path is None:
            raise ValueError("word is reduced and nontrivial: %r" % (chain.cur,))
        for (i, lhs, rhs, proof) in path:
            chain.rw(lhs, rhs, proof, at=i)


def _braid_moves(w, braids):
    for (s, t), (m, proof) in braids.items():
        for a, b in ((s, t), (t, s)):
            lhs = alternating(a, b, m)
            rhs = alternating(b, a, m)
            for i in range(len(w) - m + 1):
                if w[i:i + m] == lhs:
                    yield i, lhs, rhs, proof, w[:i] + rhs + w[i + m:]


def _braid_search(start, braids, limit):
    parent = {start: None}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        if any(w[k] == w[k + 1] for k in range(len(w) - 1)):
            path = []
            while parent[w] is not None:
                prev, move = parent[w]
                path.append(move)
                w = prev
            return list(reversed(path))
        for (i, lhs, rhs, proof, nxt) in _braid_moves(w, braids):
            if nxt not in parent:
                parent[nxt] = (w, (i, lhs, rhs, proof))
                queue.append(nxt)
                if len(parent) > limit:
                    raise RuntimeError("braid search limit reached")
    return None


# ---------------------------------------------------------------------------
# Engine mirror and JSON emission.


def split_tau(r):
    """relator = head * u * y * u^-1 with positive head; returns (head, u, y) or None."""
    n = len(r)
    if n < 2 or n % 2 or r[0] < 0:
        return None
    m = (n - 2) // 2
    for k in range(m):
        if r[1 + k] != -r[n - 1 - k]:
            return None
    return r[0], r[1:1 + m], r[1 + m]


class Script:
    def __init__(self, initial_text, name):
        self.name = name
        self.initial_text = initial_text
        self.pres = parse_presentation(initial_text)
        self.moves = []

    def _emit_steps(self, proof):
        return [{"rel": i, "conj": self.pres.render_word(c), "sign": s} for (i, c, s) in proof.steps]

    def add_consequence(self, word, proof):
        word = red(word)
        assert cyc_red(evaluate(self.pres, proof.steps)) == cyc_red(word)
        self.moves.append({"op": "AddConsequence", "word": self.pres.render_word(word),
                           "derivation": self._emit_steps(proof)})
        self.pres.rels.append(cyc_red(word))
        return len(self.pres.rels) - 1

    def remove_relator(self, i, proof=None):
        move = {"op": "RemoveRelator", "rel": i}
        if proof is not None:
            assert not proof.uses(i)
            assert cyc_red(evaluate(self.pres, proof.steps)) == cyc_red(self.pres.rels[i])
            move["derivation"] = self._emit_steps(proof)
        self.moves.append(move)
        del self.pres.rels[i]

    def add_generator(self, defining, name):
        self.moves.append({"op": "AddGenerator", "defining": self.pres.render_word(defining), "name": name})
        self.pres.names.append(name)
        g = len(self.pres.names)
        self.pres.rels.append(cyc_red((g,) + inv(defining)))
        return g

    def remove_generator(self, g, via):
        r = self.pres.rels[via]
        hits = [k for k, x in enumerate(r) if abs(x) == g]
        assert len(hits) == 1
        rot = r[hits[0]:] + r[:hits[0]]
        rest = rot[1:]
        image = inv(rest) if rot[0] > 0 else rest
        self.moves.append({"op": "RemoveGenerator", "gen": g - 1, "via": via})
        del self.pres.rels[via]

        def renum(x):
            a = abs(x)
            if a == g:
                return image if x > 0 else inv(image)
            a = a - 1 if a > g else a
            return (a if x > 0 else -a,)

        image = red(tuple(z for x in image for z in renum(x)))
        self.pres.rels = [cyc_red(tuple(z for x in r for z in renum(x))) for r in self.pres.rels]
        del self.pres.names[g - 1]

    def alpha_flip(self, rel, pos):
        head, u, y = split_tau(self.pres.rels[rel])
        m = len(u)
        u = list(u)
        if 1 <= pos <= m:
            u[pos - 1] = -u[pos - 1]
        elif pos == m + 1:
            y = -y
        else:
            k = m - 1 - (pos - m - 2)
            u[k] = -u[k]
        u = tuple(u)
        self.moves.append({"op": "AlphaFlip", "rel": rel, "pos": pos})
        self.pres.rels[rel] = cyc_red((head,) + u + (y,) + inv(u))

    def dump(self, path, expected_text):
        data = {"name": self.name, "initial": self.initial_text, "moves": self.moves,
                "expected_final": expected_text}
        with open(path, "w") as fh:
            json.dump(data, fh, indent=1)
            fh.write("\n")


def square_proofs(pres, sq_index):
    """Proofs of x^2 for every generator, spreading along the conjugation relators.

    sq_index maps the letter whose square relator is present to its index."""
    known = {}
    (g0, i0), = sq_index.items()
    known[g0] = Proof.rel(pres, i0)
    changed = True
    while changed:
        changed = False
        for i, r in enumerate(pres.rels):
            parts = split_tau(r)
            if parts is None:
                continue
            head, u, y = parts
            rp = Proof.rel(pres, i)
            if abs(head) in known and abs(y) not in known:
                known[abs(y)] = _square_step(pres, known[abs(head)], head, u, y, rp)
                changed = True
            elif abs(y) in known and abs(head) not in known:
                # u^-1 R u = u^-1 head u y, whose inverse is y^-1 u^-1 head^-1 u.
                flipped = rp.conj(inv(u)).inverse()
                known[abs(head)] = _square_step(pres, known[abs(y)], -y, inv(u), -head, flipped)
                changed = True
    return known


def _square_step(pres, sq_h, h, w, t, rel):
    """rel.word = h w t w^-1 and sq_h proves (|h|)^2; returns a proof of (|t|)^2."""
    assert rel.word == red((h,) + w + (t,) + inv(w)), (rel.word, h, w, t)
    hsq = sq_h if h > 0 else sq_h.inverse()  # proves h*h
    wi = inv(w)
    p = rel.conj(wi + (-h,)) * hsq.inverse().conj(wi) * rel.conj(wi)
    assert p.word == red((t, t))
    return p if t > 0 else p.inverse()
