"""Consistency checks run by ``sobolev2d verify`` against a stored document."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .document import BasisDocument
from .oracle import Oracle, gram_schmidt_sobolev
from .product_basis import LAGUERRE
from .sobolev import build_basis, laguerre_linear_solve


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str = ""


def _first(pairs):
    """First witness from an iterable of ``(ok, witness)`` pairs, or ``None``."""
    for ok, w in pairs:
        if not ok:
            return w
    return None


def check_document(doc: BasisDocument) -> CheckResult:
    """Stored matrices and polynomials equal a fresh derivation from the metadata."""
    fresh = BasisDocument.from_basis(build_basis(doc.pw, doc.max_degree, doc.lam))
    if len(doc.degrees) != doc.max_degree:
        return CheckResult("document", False, f"expected {doc.max_degree} degree records, got {len(doc.degrees)}")

    def gen():
        for got, want in zip(doc.degrees, fresh.degrees):
            n = got.degree
            for name in ("H_hat", "coupling", "D", "C"):
                a, b = getattr(got, name), getattr(want, name)
                if a.shape != b.shape:
                    yield False, f"{name}_{n} shape {a.shape} != {b.shape}"
                    continue
                for i in range(a.rows):
                    for j in range(a.cols):
                        yield a[i, j] == b[i, j], f"{name}_{n}[{i},{j}] = {a[i, j]}, expected {b[i, j]}"
            for label in ("canonical", "shifted"):
                ps, qs = getattr(got, label), getattr(want, label)
                yield len(ps) == len(qs), f"{label} degree {n} has {len(ps)} polynomials"
                for k, (p, q) in enumerate(zip(ps, qs)):
                    yield p == q, f"{label} (n, k) = ({n}, {k})"

    w = _first(gen())
    return CheckResult("document", w is None, w or "")


def check_grad_orthogonality(doc: BasisDocument, orc: Oracle, D: int) -> CheckResult:
    def gen():
        for n in range(2, D + 1):
            for m in range(1, n):
                for k in range(n + 1):
                    for j in range(m + 1):
                        v = orc.inner_nabla(doc.canonical(n, k), doc.canonical(m, j))
                        yield v == 0, f"(n, k, m, j) = ({n}, {k}, {m}, {j}): <S, S>_grad = {v}"

    w = _first(gen())
    return CheckResult("grad_orthogonality", w is None, w or "")


def check_gram_identity(doc: BasisDocument, orc: Oracle, D: int) -> CheckResult:
    """Oracle Gram matrix of each degree block equals ``diag(d_0, H_hat, d_n)``."""
    def gen():
        for n in range(1, D + 1):
            rec = doc.record(n)
            S = rec.canonical
            for k in range(n + 1):
                for j in range(n + 1):
                    if 1 <= k <= n - 1 and 1 <= j <= n - 1:
                        want = rec.H_hat[k - 1, j - 1]
                    elif k == j:
                        want = rec.D[k, k]
                    else:
                        want = Fraction(0)
                    got = orc.inner_nabla(S[k], S[j])
                    yield got == want, f"(n, k, m, j) = ({n}, {k}, {n}, {j}): oracle {got} != {want}"

    w = _first(gen())
    return CheckResult("H_gram_identity", w is None, w or "")


def check_sobolev_orthogonality(doc: BasisDocument, orc: Oracle, lam: Fraction, D: int) -> CheckResult:
    def gen():
        for n in range(1, D + 1):
            for m in range(n):
                for k in range(n + 1):
                    for j in range(m + 1):
                        v = orc.inner_S(lam, doc.shifted(n, k), doc.shifted(m, j))
                        yield v == 0, f"(n, k, m, j) = ({n}, {k}, {m}, {j}): <S, S>_S = {v} at lambda {lam}"

    w = _first(gen())
    return CheckResult(f"sobolev_orthogonality(lambda={lam})", w is None, w or "")


def check_gram_schmidt(doc: BasisDocument, lam: Fraction, D: int) -> CheckResult:
    gs = gram_schmidt_sobolev(doc.pw, lam, D)
    w = _first(((gs[(n, k)] == doc.shifted(n, k), f"(n, k) = ({n}, {k})")
                for n in range(D + 1) for k in range(n + 1)))
    return CheckResult(f"gram_schmidt(lambda={lam})", w is None, w or "")


def check_lambda_invariance(doc: BasisDocument, lam_alt: Fraction) -> CheckResult:
    a = build_basis(doc.pw, doc.max_degree, doc.lam)
    b = build_basis(doc.pw, doc.max_degree, lam_alt)
    w = _first(((a[nk] == b[nk], f"(n, k) = {nk}") for nk in sorted(a.shifted)))
    return CheckResult("lambda_invariance", w is None, w or "")


def check_swap_symmetry(doc: BasisDocument) -> CheckResult:
    w = _first(((doc.canonical(n, n - k) == doc.canonical(n, k).swap(), f"(n, k) = ({n}, {k})")
                for n in range(1, doc.max_degree + 1) for k in range(n + 1)))
    return CheckResult("swap_symmetry", w is None, w or "")


def check_route_agreement(doc: BasisDocument, D: int) -> CheckResult:
    def gen():
        for n in range(2, D + 1):
            for k in range(1, n):
                diff = laguerre_linear_solve(doc.pw, n, k) - doc.canonical(n, k)
                yield diff.is_constant(), f"(n, k) = ({n}, {k}): routes differ by {diff}"

    w = _first(gen())
    return CheckResult("laguerre_route_agreement", w is None, w or "")


def run_checks(doc: BasisDocument, oracle_max_degree: int = 6, lambda_alt=7) -> list[CheckResult]:
    lam_alt = Fraction(lambda_alt)
    D = min(oracle_max_degree, doc.max_degree)
    orc = Oracle(doc.pw, max(D, 1))
    results = [
        check_document(doc),
        check_grad_orthogonality(doc, orc, D),
        check_gram_identity(doc, orc, D),
        check_sobolev_orthogonality(doc, orc, doc.lam, D),
        check_sobolev_orthogonality(doc, orc, lam_alt, D),
        check_gram_schmidt(doc, doc.lam, D),
        check_gram_schmidt(doc, lam_alt, D),
        check_lambda_invariance(doc, lam_alt),
    ]
    if doc.alpha == doc.beta:
        results.append(check_swap_symmetry(doc))
    if doc.family == LAGUERRE:
        results.append(check_route_agreement(doc, D))
    return results


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        line = f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}"
        if not r.passed:
            line += f"  first witness: {r.witness}"
        lines.append(line)
    return "\n".join(lines)

