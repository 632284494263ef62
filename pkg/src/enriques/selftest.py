"""Oracle cross-checks runnable from the CLI (``enriques selftest``)."""
from __future__ import annotations

from math import isqrt

from . import exceptional as exc
from . import limit_surface as ls
from .corpus import phi_corpus
from .fundrep import enumerate_components, fundamental_coefficients
from .invariants import length, phi
from .isotropy import isotropic_slice
from .lattice import (
    E8_CLASS, NumClass, PicClass, change_of_basis_certificate, is_effective, pair,
)
from .oracles import census_oracle, phi_oracle, slice_oracle


def _lattice():
    rep = change_of_basis_certificate()
    basis = [NumClass.basis(i) for i in range(10)]
    return (rep.determinant == -1 and rep.signature == (1, 9) and rep.even
            and all(pair(E8_CLASS, b) == 1 for b in basis) and pair(E8_CLASS, E8_CLASS) == 0)


def _phi(corpus):
    for H in corpus:
        value, wits = phi_oracle(H)
        if value != phi(H):
            return False
        if wits != list(isotropic_slice(H, value).solutions):
            return False
    return True


def _slices(corpus):
    for H in corpus[:5]:
        for c in range(1, isqrt(pair(H, H)) + 1):
            if slice_oracle(H, c) != list(isotropic_slice(H, c).solutions):
                return False
    return True


def _bounds(corpus):
    return all(phi(H) ** 2 <= pair(H, H) for H in corpus)


def _lengths(corpus):
    for L in corpus:
        sq = pair(L, L)
        if sq > 40:
            continue
        n = length(L)
        p = phi(L)
        if p > n or sq > n * n + n - 2:
            return False
        if sq == n * n + n - 2 and p != n:
            return False
    return True


def _templates(hmax):
    cases = [(exc.Tag.TYPE_I, None), (exc.Tag.TYPE_II, None)]
    cases += [(t, h) for t in (exc.Tag.TYPE_III, exc.Tag.TYPE_IV) for h in range(1, hmax + 1)]
    for tag, h in cases:
        C = exc.construct_exceptional(tag, h)
        sq, p, l = exc.closed_forms(tag, h)
        if (pair(C, C), phi(C), length(C, cap=max(sq, 100))) != (sq, p, l):
            return False
        got = exc.classify_exceptional(C)
        if got.tag is not tag or got.h != h:
            return False
    return True


def _fundrep(corpus):
    for H in corpus:
        if pair(H, H) > 20:
            continue
        w = fundamental_coefficients(PicClass(H))
        if not w.check():
            return False
        for seed in range(5):
            if fundamental_coefficients(PicClass(H), rng=seed).coefficients != w.coefficients:
                return False
    return True


def _census(top):
    for sq in range(2, top + 1, 2):
        got = [(r.a, r.epsilon) for r in enumerate_components(sq)]
        if got != census_oracle(sq):
            return False
    return True


def _limit():
    e1, e2, e3 = ls.e0_classes()
    L0 = ls.l0_class()
    x = ls.xi()
    gens = [ls._split(v, ls.DEFAULT_K) for v in ls.cartier_generators()]
    q = ls.quotient_invariants()
    return (ls.pair_limit(e1, e2) == 1 and ls.pair_limit(e1, e3) == 2 and ls.pair_limit(e2, e3) == 2
            and ls.pair_limit(L0, L0) == 40 and ls.pair_limit(x, x) == 0
            and all(ls.pair_limit(x, g) == 0 for g in gens)
            and len({ls.parity_obstruction(ls.twist(L0, a)) for a in range(-5, 6)}) == 1
            and (q.rank, abs(q.determinant), q.even, q.signature) == (10, 1, True, (1, 9)))


def _verify():
    from .lattice import E1, E2, E9, E10, E910

    for H in (E1 * 2 + E2, E1 + E2, (E9 + E10 + E910) * 2):
        cert = exc.verify_eps_equals_phi(H)
        if cert.verdict is not exc.Verdict.IMPOSSIBLE or not cert.validate():
            return False
        if not cert.obstruction.obstructed or len(cert.obstruction.steps) != 5:
            return False
    return True


def _effectivity():
    return not is_effective(NumClass((1, -1, 0, 0, 0, 0, 0, 0, 0, 0)))


def run_selftest(full=False):
    corpus = phi_corpus()
    sample = corpus if full else corpus[:8]
    checks = [
        ("lattice certificate", _lattice),
        ("phi vs box oracle", lambda: _phi(sample)),
        ("slices vs box oracle", lambda: _slices(sample)),
        ("phi^2 <= H^2", lambda: _bounds(sample)),
        ("length lemmas", lambda: _lengths(sample)),
        ("exceptional templates", lambda: _templates(5 if full else 2)),
        ("fundamental representation", lambda: _fundrep(sample)),
        ("census vs oracle", lambda: _census(20 if full else 12)),
        ("limit surface", _limit),
        ("theorem replay", _verify),
        ("no (-2)-classes effective", _effectivity),
    ]
    out = []
    for name, fn in checks:
        try:
            ok = bool(fn())
            err = None
        except Exception as e:  # a crash is a failed check, reported not raised
            ok, err = False, f"{type(e).__name__}: {e}"
        rec = {"name": name, "ok": ok}
        if err:
            rec["error"] = err
        out.append(rec)
    return out
