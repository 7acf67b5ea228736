#!/usr/bin/env python3
"""Regenerates the shipped move scripts under data/scripts."""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from fixtures import fixture_texts  # noqa: E402
from tietze import (Algebra, Chain, Proof, Script, coxeter_prove, inv, red,  # noqa: E402
                    square_proofs)

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "scripts")


def tau_torus2_text(n):
    m = n if n >= 0 else -n - 1
    w = "(x2*x1)^%d" % m
    return "< x1, x2 | x1^2, x1*%s*x2*%s^-1 >" % (w, w)


def thm_pi1(n):
    m = n if n >= 0 else -n - 1
    k = 2 * m + 1
    s = Script(tau_torus2_text(n), "thm_pi1_n%d" % n)
    p = s.pres
    sq = square_proofs(p, {1: 0})
    s.add_consequence((2, 2), sq[2])
    alg = Algebra(p, {1, 2})
    b = s.add_generator((2, 1), "b")
    p_def = Proof.rel(p, 3)
    p_r = Proof.rel(p, 1)
    p_bk = Chain(alg, (b,) * k).rw_all((b,), (2, 1), p_def).close(p_r)
    s.add_consequence((b,) * k, p_bk)
    p_bk = Proof.rel(p, 4)
    p_x1b = Chain(alg, (1, b, 1, b)).rw_all((b,), (2, 1), p_def).close()
    s.add_consequence((1, b, 1, b), p_x1b)
    p_x1b = Proof.rel(p, 5)
    chain = Chain(alg, p.rels[1]).to((1, 2) * k).rw_all((1, 2), (-b,), p_def)
    s.remove_relator(1, chain.close(p_bk))
    s.remove_generator(2, 2)
    alg = Algebra(p, {1})
    s.remove_relator(1, alg.derive(p.rels[1], Proof.rel(p, 3)))
    expected = "< a, b | a^2, (a*b)^2, b^%d >" % k
    return s, expected


def seq(text):
    return tuple(int(c) for c in text)


def rel_proof(p, word):
    return Proof.rel(p, p.rels.index(red(word)))


def prepare(name):
    """Fixture script with x2^2 and x3^2 appended; returns (script, algebra)."""
    s = Script(fixture_texts()[name], name)
    sq = square_proofs(s.pres, {1: 0})
    s.add_consequence((2, 2), sq[2])
    s.add_consequence((3, 3), sq[3])
    return s, Algebra(s.pres, {1, 2, 3})


def retarget(s, alg, targets, remove, keep_squares, expected):
    """Adds target relators, then removes the source relators with `remove`."""
    for word, make in targets:
        s.add_consequence(word, make(s.pres, alg))
    for _ in range(2):
        s.remove_relator(1, remove(s.pres, alg, s.pres.rels[1]))
    if not keep_squares:
        for g in (3, 2):
            sq = square_proofs(s.pres, {1: 0})
            s.remove_relator(s.pres.rels.index((g, g)), sq[g])
    return s, expected


def coxeter_remover(labels):
    def remove(p, alg, word):
        braids = {pair: (m, rel_proof(p, w)) for pair, (m, w) in labels.items()}
        return coxeter_prove(alg, word, braids)
    return remove


COMMON = fixture_texts()["irregular_common"]
COMMON_T1 = (1, 2, 1, 2, -1, -2)
COMMON_T2 = (2, 3, 2, 3, -2, -3)
COMMON_LABELS = {(1, 2): (3, COMMON_T1), (2, 3): (3, COMMON_T2)}


def common_target(s, alg, prove_t2, prove_t1):
    """prove_t2 / prove_t1 prove (23)^3 and (12)^3 in the free product."""
    def t2(p, a):
        return a.derive(COMMON_T2, prove_t2(p, a))

    def t1(p, a):
        return a.derive(COMMON_T1, prove_t1(p, a))
    return retarget(s, alg, [(COMMON_T1, t1), (COMMON_T2, t2)],
                    coxeter_remover(COMMON_LABELS), False, COMMON)


def irregular_12n553(name="12n553", flips=()):
    s, alg = prepare(name)
    for rel, pos in flips:
        s.alpha_flip(rel, pos)
    A = Proof.rel(s.pres, 1)
    B = Proof.rel(s.pres, 2)
    b3 = seq("323232")
    a3 = seq("212121")

    def p23(p, a):
        ch = Chain(a, b3).to(seq("2323") + b3 + seq("23") + b3)
        ch.rw(b3, a3, A, at=4)
        ch.rw(b3, a3, A, at=12)
        return ch.close(B)

    def p12(p, a):
        ch = Chain(a, seq("121212")).rw((), b3, p23(p, a), at=6)
        return ch.close(A)
    return common_target(s, alg, p23, p12)


def irregular_3_1_6_1():
    s, alg = prepare("3_1#6_1#3_1*")
    A = Proof.rel(s.pres, 1)
    B = Proof.rel(s.pres, 2)
    X, X2 = seq("12121"), seq("32323")

    def p23(p, a):
        ch = Chain(a, seq("323232")).to(seq("23") + X2 + (3,) + X2 + (3,))
        ch.rw(X2, X, A, at=2)
        ch.rw(X2, X, A, at=8)
        return ch.close(B)

    def p12(p, a):
        ch = Chain(a, seq("212121")).rw(X, X2, A, at=1)
        return ch.close(p23(p, a))
    return common_target(s, alg, p23, p12)


def irregular_3_1_x4():
    s, alg = prepare("3_1#3_1#3_1*#3_1*")
    A = Proof.rel(s.pres, 1)
    B = Proof.rel(s.pres, 2)

    def p23(p, a):
        return A

    def p12(p, a):
        ch = Chain(a, seq("121212"))
        ch.rw((2,), seq("32323"), A, at=1)
        ch.rw((2,), seq("32323"), A, at=9)
        return ch.close(B)
    return common_target(s, alg, p23, p12)


def coxeter_text(m12, m23, m13):
    rels = ["x1^2", "x2^2", "x3^2"]
    for (a, b), m in (((1, 2), m12), ((2, 3), m23), ((1, 3), m13)):
        if m is not None:
            rels.append("(x%d*x%d)^%d" % (a, b, m))
    return "< x1, x2, x3 | " + ", ".join(rels) + " >"


def fusion2_10_99():
    s, alg = prepare("10_99_D2")
    t12, t23 = seq("12") * 3, seq("23") * 3
    targets = [(t12, lambda p, a: a.derive(t12, Proof.rel(p, 1))),
               (t23, lambda p, a: a.derive(t23, Proof.rel(p, 2)))]
    return retarget(s, alg, targets, coxeter_remover({(1, 2): (3, t12), (2, 3): (3, t23)}),
                    True, coxeter_text(3, 3, None))


def fusion2_12a427():
    s, alg = prepare("12a427_D2")
    A = Proof.rel(s.pres, 1)
    B = Proof.rel(s.pres, 2)
    P, Q, c = seq("21212"), seq("313"), (3,)
    r = Q + P
    t13, t12 = seq("13") * 5, seq("12") * 3

    def r5(a):
        # (QP)^5 = (QPQPQ)(PQPQP) = c c
        ch = Chain(a, r * 5)
        ch.rw(Q + P + Q + P + Q, c, A, at=0)
        ch.rw(P + Q + P + Q + P, c, B, at=1)
        return ch.close()

    def p13(p, a):
        ch = Chain(a, t13)
        for k in range(5):
            ch.rw(seq("13"), r * 2, A, at=len(r) * 2 * k)
        ch.rw(r * 5, (), r5(a), at=0)
        return ch.close(r5(a))

    def p12(p, a):
        ch = Chain(a, t12).to((1,) + Q + Q + P)
        ch.rw((), r * 5, r5(a), at=1 + len(Q))
        for k in range(3):
            ch.rw(r * 2, seq("13"), A, at=1 + len(Q) + 2 * k)
        return ch.close(rel_proof(p, t13))
    targets = [(t13, p13), (t12, p12)]
    return retarget(s, alg, targets, coxeter_remover({(1, 2): (3, t12), (1, 3): (5, t13)}),
                    True, coxeter_text(3, None, 5))


def fusion2_12a990(name):
    s, alg = prepare(name)
    t13 = seq("13") * 3
    t2 = seq("1212323232")
    targets = [(t13, lambda p, a: a.derive(t13, Proof.rel(p, 1))),
               (t2, lambda p, a: a.derive(t2, Proof.rel(p, 2)))]

    def remove(p, a, word):
        for w in (t13, t2):
            try:
                return a.derive(word, rel_proof(p, w))
            except ValueError:
                pass
        raise ValueError("no target matches %r" % (word,))
    expected = "< x1, x2, x3 | x1^2, x2^2, x3^2, (x1*x3)^3, (x1*x2)^2*(x3*x2)^3 >"
    return retarget(s, alg, targets, remove, True, expected)


FIXTURE_SCRIPTS = {
    "irregular_12n553": lambda: irregular_12n553(),
    "irregular_12n556": lambda: irregular_12n553("12n556", [(1, 1), (2, 4), (2, 5), (2, 6)]),
    "irregular_3_1_6_1_3_1m": irregular_3_1_6_1,
    "irregular_3_1_3_1_3_1m_3_1m": irregular_3_1_x4,
    "fusion2_10_99_D2": fusion2_10_99,
    "fusion2_12a427_D2": fusion2_12a427,
    "fusion2_12a990": lambda: fusion2_12a990("12a990"),
    "fusion2_12a1225_D2": lambda: fusion2_12a990("12a1225_D2"),
}


def main():
    os.makedirs(OUT, exist_ok=True)
    for n in range(1, 6):
        s, expected = thm_pi1(n)
        s.dump(os.path.join(OUT, "thm_pi1_n%d.json" % n), expected)
        print(s.name, s.pres.render())
    for fname, make in FIXTURE_SCRIPTS.items():
        s, expected = make()
        s.dump(os.path.join(OUT, fname + ".json"), expected)
        print(fname, len(s.moves), s.pres.render())
    fixtures = [{"name": k, "presentation": v} for k, v in fixture_texts().items()]
    with open(os.path.join(OUT, "..", "fixtures.json"), "w") as f:
        json.dump({"fixtures": fixtures}, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
