"""Command-line front end.

Exit codes: 0 success, 1 violation or counterexample found, 2 usage error,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from typing import Any, Callable, Sequence

from . import __version__
from .alcoved import PolytopeSpec, enumerate_complementary_pairs, in_minimal_alcoved, polytope_members
from .combinatorics import check_subset, parse_partition, parse_weight, partition_from_subset
from .horn import (
    Triple,
    enumerate_triples,
    hk_sides,
    lr_positive_via_hk,
    triple_in_T,
)
from .ring import generalized_jacobi_trudi, x_matrix
from .schur import character_product, h_poly_to_schur, lr_coefficient, schur_product, set_memo_cap
from .temperley_lieb import NonCrossingMatching, all_immanants, minor_product_decomposition, theta
from .verifier import (
    ConsistencyError,
    chi_nonnegativity_check,
    labeling_failures,
    construct_pairing,
    convention_self_test,
    recoloring_failures,
    support_containment_check,
    sweep_conjecture,
    sweep_theorem,
    verify_pairing,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed integer list {text!r}") from None


def _subset(text: str, n: int) -> tuple[int, ...]:
    return check_subset(_ints(text), n)


def _pairs(text: str, n: int) -> NonCrossingMatching:
    try:
        pairs = [tuple(int(x) for x in chunk.split("-")) for chunk in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed pair list {text!r}; expected e.g. 1-2,3-4") from None
    return NonCrossingMatching.from_pairs(pairs, n)


class _Out:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, data: Any, text: str | Callable[[], str] | None = None):
        if self.fmt == "json" or text is None:
            self.stream.write(json.dumps(data, indent=2) + "\n")
        else:
            self.stream.write((text() if callable(text) else text) + "\n")


# --- subcommands ------------------------------------------------------------


def cmd_lr(a, out):
    c = lr_coefficient(parse_partition(a.a), parse_partition(a.b), parse_partition(a.c))
    out.emit(c, str(c))
    return EXIT_OK


def cmd_schur_prod(a, out):
    v = schur_product(parse_partition(a.a), parse_partition(a.b))
    out.emit(v.to_json(), repr(v))
    return EXIT_OK


def cmd_char_prod(a, out):
    v = character_product(parse_weight(a.lam, a.n), parse_weight(a.mu, a.n))
    out.emit(v.to_json(), repr(v))
    return EXIT_OK


def cmd_jt_matrix(a, out):
    V, U = _ints(a.V), _ints(a.U)
    X = generalized_jacobi_trudi(V, U)
    data = {"V": V, "U": U, "entries": [[e.to_json() for e in row] for row in X]}
    out.emit(data, lambda: "\n".join("  ".join(f"{e!r:>6}" for e in row) for row in X))
    return EXIT_OK


def cmd_tl_imm(a, out):
    V, U = _ints(a.V), _ints(a.U)
    X = generalized_jacobi_trudi(V, U)
    imms = all_immanants(X)
    chosen = [_pairs(a.pairs, len(V))] if a.pairs else sorted(imms)
    rows = []
    status = EXIT_OK
    for mtc in chosen:
        sv = h_poly_to_schur(imms[mtc])
        if not sv.is_nonnegative():
            status = EXIT_VIOLATION
        rows.append({
            "matching": mtc.to_json(),
            "immanant": imms[mtc].to_json(),
            "schur": sv.to_json(),
            "nonnegative": sv.is_nonnegative(),
        })
    out.emit(rows, lambda: "\n".join(
        f"[{NonCrossingMatching.from_json(r['matching'])}]  {h_poly_to_schur(imms[NonCrossingMatching.from_json(r['matching'])])!r}"
        for r in rows
    ))
    return status


def cmd_theta(a, out):
    S = _subset(a.S, 2 * a.n)
    ms = theta(S, a.n)
    out.emit([m.to_json() for m in ms], lambda: "\n".join(str(m) for m in ms) or "(empty)")
    return EXIT_OK


def cmd_minor_decomp(a, out):
    n = a.n
    I, J = _subset(a.I, n), _subset(a.J, n)
    if a.symbolic:
        X = x_matrix(n)
        matrix_json: Any = "symbolic"
    else:
        rng = random.Random(a.seed)
        X = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        matrix_json = X
    d = minor_product_decomposition(X, I, J)
    holds = d.holds()
    data = {
        "n": n, "I": list(I), "J": list(J), "seed": a.seed, "matrix": matrix_json,
        "S": sorted(d.colors),
        "theta": [m.to_json() for m, _ in d.terms],
        "holds": holds,
    }
    out.emit(data, lambda: f"S={sorted(d.colors)}  |Theta(S)|={len(d.terms)}  identity {'holds' if holds else 'FAILS'}")
    return EXIT_OK if holds else EXIT_INTERNAL


def _triple(a) -> Triple:
    return Triple(a.n, _subset(a.I, a.n), _subset(a.J, a.n), _subset(a.K, a.n))


def cmd_hk_check(a, out):
    t = _triple(a)
    alpha, beta, gamma = (parse_partition(x) for x in (a.alpha, a.beta, a.gamma))
    lhs, rhs = hk_sides(alpha, beta, gamma, t)
    data = {"triple": t.to_json(), "in_T": triple_in_T(t), "lhs": lhs, "rhs": rhs, "holds": lhs <= rhs}
    out.emit(data, f"{lhs} <= {rhs}: {lhs <= rhs}  (triple in T: {data['in_T']})")
    return EXIT_OK


def cmd_hk_oracle(a, out):
    alpha, beta, gamma = (parse_partition(x) for x in (a.alpha, a.beta, a.gamma))
    via = lr_positive_via_hk(alpha, beta, gamma, a.n)
    c = lr_coefficient(alpha, beta, gamma)
    agree = via == (c > 0)
    data = {"n": a.n, "via_inequalities": via, "lr_coefficient": c, "agree": agree}
    out.emit(data, f"inequalities: {via}  LR coefficient: {c}  agree: {agree}")
    return EXIT_OK if agree else EXIT_INTERNAL


def cmd_triples(a, out):
    ts = enumerate_triples(a.r, a.n)
    out.emit([t.to_json() for t in ts], lambda: "\n".join(f"{t.I} {t.J} {t.K}" for t in ts))
    return EXIT_OK


def cmd_polytope(a, out):
    spec = PolytopeSpec(parse_weight(a.lam, a.n), parse_weight(a.mu, a.n))
    if a.tau is not None:
        inside = in_minimal_alcoved(parse_weight(a.tau, a.n), spec)
        out.emit(inside, str(inside).lower())
        return EXIT_OK
    members = [list(w.vector()) for w in polytope_members(spec)]
    out.emit(members, lambda: "\n".join(",".join(map(str, m)) for m in members))
    return EXIT_OK


def cmd_pairs(a, out):
    spec = PolytopeSpec(parse_weight(a.lam, a.n), parse_weight(a.mu, a.n))
    pairs = [[list(x.vector()), list(y.vector())] for x, y in enumerate_complementary_pairs(spec)]
    out.emit(pairs, lambda: "\n".join(f"{x}  {y}" for x, y in pairs))
    return EXIT_OK


def cmd_pairing(a, out):
    t = _triple(a)
    pairing, trace = construct_pairing(t)
    claim = labeling_failures(trace)
    recolor = recoloring_failures(trace)
    valid = verify_pairing(t, pairing)
    data = {"trace": trace.to_json(), "labeling_failures": claim, "recoloring_failures": recolor, "valid": valid}
    out.emit(data, f"l={list(pairing.l)} m={list(pairing.m)}  valid={valid}  k={trace.k}")
    return EXIT_OK if valid and not claim and not recolor else EXIT_INTERNAL


def cmd_verify(a, out):
    ws = [parse_weight(x, a.n) for x in (a.lam, a.mu, a.nu, a.rho)]
    report = support_containment_check(*ws)
    diff, nonneg = chi_nonnegativity_check(*ws)
    data = report.to_json()
    data["chi_nonnegative"] = nonneg
    data["negative_terms"] = [[list(w.vector()), c] for w, c in diff.negative_terms()]

    def text():
        lines = [f"chi_nu chi_rho - chi_lambda chi_mu = {diff!r}",
                 f"missing from support: {[str(w) for w in report.missing]}",
                 f"chi-nonnegative: {nonneg}"]
        lines += [f"precondition: {p}" for p in report.precondition_violations]
        return "\n".join(lines)

    out.emit(data, text)
    return EXIT_OK if report.holds and nonneg else EXIT_VIOLATION


def _targets(a):
    if not a.target:
        return None
    out = []
    for spec in a.target:
        try:
            lam, mu = spec.split(";")
        except ValueError:
            raise ValueError(f"target {spec!r} must look like 12,7,0;4,2,0") from None
        out.append((parse_weight(lam, a.n), parse_weight(mu, a.n)))
    return out


def _sweep(fn, a, out):
    report = fn(a.n, a.bound, workers=a.workers, targets=_targets(a))
    if not a.timing:
        report.elapsed_ms = None
    out.emit(report.to_json(), lambda: (
        f"{report.mode}: {report.pairs_examined} (lambda, mu) pairs, {report.quadruples} quadruples, "
        f"max support {report.max_support}, {len(report.violations)} violations"
    ))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_sweep_theorem(a, out):
    return _sweep(sweep_theorem, a, out)


def cmd_sweep_conjecture(a, out):
    return _sweep(sweep_conjecture, a, out)


def cmd_self_test(a, out):
    checks = {}
    convention_self_test(a.seed, trials=5)
    checks["minor_expansion"] = True
    rng = random.Random(a.seed)
    for n in (2, 3, 4):
        for _ in range(5):
            X = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
            full = tuple(range(1, n + 1))
            if not minor_product_decomposition(X, full, full).holds():
                raise ConsistencyError(f"identity diagram immanant differs from det for {X}")
    checks["identity_immanant_is_det"] = True
    ws = [parse_weight(x, 3) for x in ("12,7,0", "4,2,0", "5,2,0", "11,7,0")]
    diff, nonneg = chi_nonnegativity_check(*ws)
    ok = nonneg and len(diff) == 14 and all(c == 1 for _, c in diff)
    checks["worked_character_example"] = ok
    jt_ok = all(
        h_poly_to_schur(_jt_det(sorted(I, reverse=True))) .terms == {partition_from_subset(I): 1}
        for I in ((3, 1), (5, 4, 2), (4, 2))
    )
    checks["jacobi_trudi"] = jt_ok
    out.emit({"seed": a.seed, "checks": checks}, "\n".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in checks.items()))
    return EXIT_OK if all(checks.values()) else EXIT_INTERNAL


def _jt_det(I):
    from .ring import determinant

    r = len(I)
    return determinant(generalized_jacobi_trudi(I, list(range(r, 0, -1))))


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--memo-cap", type=int, default=None,
                        help="cap on memo table entries (also SCHURPOS_MEMO_CAP)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(
        prog="schurpos",
        description="Exact checks on sl_n tensor products, Temperley-Lieb immanants and Horn-Klyachko triples.",
        epilog="exit codes: 0 ok, 1 violation found, 2 usage error, 3 internal consistency failure",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient")
    for f in ("a", "b", "c"):
        p.add_argument(f"--{f}", required=True)
    p = add("schur-prod", cmd_schur_prod, "Schur expansion of s_a s_b")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p = add("char-prod", cmd_char_prod, "product of sl_n characters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p = add("jt-matrix", cmd_jt_matrix, "generalized Jacobi-Trudi matrix")
    p.add_argument("--V", required=True)
    p.add_argument("--U", required=True)
    p = add("tl-imm", cmd_tl_imm, "Temperley-Lieb immanants of a generalized Jacobi-Trudi matrix")
    p.add_argument("--V", required=True)
    p.add_argument("--U", required=True)
    p.add_argument("--pairs", help="one diagram as vertex pairs, e.g. 1-2,3-4")
    p = add("theta", cmd_theta, "diagrams compatible with a color set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--S", required=True)
    p = add("minor-decomp", cmd_minor_decomp, "complementary minors versus immanant sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--I", required=True)
    p.add_argument("--J", required=True)
    p.add_argument("--symbolic", action="store_true", help="use the generic x_ij matrix")
    for name, fn, help_ in (("hk-check", cmd_hk_check, "one Horn-Klyachko inequality"),
                            ("hk-oracle", cmd_hk_oracle, "LR positivity via the inequalities")):
        p = add(name, fn, help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--alpha", required=True)
        p.add_argument("--beta", required=True)
        p.add_argument("--gamma", required=True)
        if name == "hk-check":
            for f in ("I", "J", "K"):
                p.add_argument(f"--{f}", required=True)
    p = add("triples", cmd_triples, "enumerate T_r^n")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = add("polytope", cmd_polytope, "minimal alcoved polytope membership or lattice points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--tau")
    p = add("pairs", cmd_pairs, "complementary pairs inside the polytope")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p = add("pairing", cmd_pairing, "construct and verify a pairing for a triple")
    p.add_argument("--n", type=int, required=True)
    for f in ("I", "J", "K"):
        p.add_argument(f"--{f}", required=True)
    p = add("verify", cmd_verify, "support containment and chi-nonnegativity for one quadruple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--rho", required=True)
    for name, fn, help_ in (
        ("sweep-theorem", cmd_sweep_theorem, "support containment over all weights with bounded parts"),
        ("sweep-conjecture", cmd_sweep_conjecture, "coefficientwise nonnegativity over the same range"),
    ):
        p = add(name, fn, help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--bound", type=int, required=True)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--target", action="append", help="restrict to one (lambda;mu) pair, repeatable")
        p.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-identical output)")
    add("self-test", cmd_self_test, "exact identities the rest of the package relies on")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"schurpos: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=stderr)
    if args.memo_cap is not None:
        set_memo_cap(args.memo_cap)
    try:
        return args.func(args, _Out(args.format, stdout))
    except ConsistencyError as exc:
        stderr.write(f"schurpos: internal consistency failure: {exc}\n")
        return EXIT_INTERNAL
    except (ValueError, UsageError) as exc:
        stderr.write(f"schurpos: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
