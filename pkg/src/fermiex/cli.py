"""Command-line front end: analyze, helium, exclusion-scan, schmidt, pauli-pair.

Exit codes: 0 success, 1 usage or input error, 2 excluded-state verdict.
FERMI_TOL overrides the default tolerance; an explicit --tol flag wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .antisym import antisymmetrize, exchange_antisymmetry_check, is_excluded, symmetric_pairs
from .basis import BasisSpec, basis_index_of
from .defaults import DEFAULT_RANK_TOL, DEFAULT_TOL
from .errors import ExcludedStateError, FermiexError, LabelError, ParseError
from .helium import (
    HeliumVariant,
    build_state,
    exclusion_catalog,
    overlap_kernel,
    pauli_pair,
    slater_report,
)
from .report import Report
from .stateio import parse_matrix, parse_state, write_state
from .states import normalize, partial_trace, purity
from .weakent import pauli_verdict_star, quantum_number_set, rank1_truncate, schmidt

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_EXCLUDED = 2

# Schmidt strength above which the rank-1 truncation is flagged as doubtful.
WEAK_STRENGTH_WARNING = 0.1

VARIANT_ORDER = (HeliumVariant.PLUS, HeliumVariant.MINUS, HeliumVariant.STAR)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; remap to 1 (2 means excluded here)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _resolve_tol(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("FERMI_TOL")
    if env is not None:
        try:
            return float(env)
        except ValueError:
            raise ParseError(f"FERMI_TOL is not a number: {env!r}") from None
    return DEFAULT_TOL


def _parse_spin(text: str) -> np.ndarray:
    """Comma-separated re:im components, e.g. '1:0,0:0'."""
    components = []
    for part in text.split(","):
        re_text, sep, im_text = part.partition(":")
        if not sep:
            raise ParseError(f"spin component {part!r} is not re:im")
        try:
            components.append(complex(float(re_text), float(im_text)))
        except ValueError:
            raise ParseError(f"spin component {part!r} is not re:im") from None
    return np.asarray(components, dtype=np.complex128)


def _pair_strings(pairs: list[tuple[int, int]]) -> list[str]:
    return [f"({i},{j})" for i, j in pairs]


def _verdict_string(excluded: bool, condition: str) -> str:
    return f"excluded({condition})" if excluded else "allowed"


def _mode_label_string(label: tuple[int, int, int]) -> str:
    return f"({label[0]},{label[1]},{label[2]})"


def _add_exclusion_section(rep: Report, verdict, pairs) -> None:
    rep.add("exclusion", "excluded", verdict.excluded)
    rep.add("exclusion", "norm_ratio", verdict.norm_ratio)
    rep.add("exclusion", "condition", verdict.condition)
    rep.add("exclusion", "pair_symmetric", _pair_strings(pairs))


def cmd_analyze(args) -> tuple[Report, int]:
    tol = _resolve_tol(args)
    rank_tol = args.rank_tol
    t = parse_state(args.statefile)
    rep = Report()
    rep.add("state", "n", t.n)
    rep.add("state", "d", t.spec.d)
    rep.add("state", "spin", t.spec.S)
    rep.add("state", "norm", t.norm())
    rep.add("state", "pre_antisymmetrize", bool(args.pre_antisymmetrize))
    if args.normalize:
        t = normalize(t, tol)

    verdict = is_excluded(t, tol)
    _add_exclusion_section(rep, verdict, symmetric_pairs(t, tol))
    if verdict.excluded:
        return rep, EXIT_EXCLUDED

    if args.pre_antisymmetrize:
        t = normalize(antisymmetrize(t), tol)
    rep.add("symmetry", "antisymmetric", exchange_antisymmetry_check(t, tol))

    if t.n == 2:
        if exchange_antisymmetry_check(t, tol):
            sl = slater_report(t, rank_tol, tol)
            rep.add("slater", "slater_rank", sl.slater_rank)
            rep.add("slater", "singular_values", list(sl.singular_values))
            rep.add("slater", "entangled", sl.entangled)
        rep.add("density", "purity_keep1", purity(partial_trace(t, 1), tol))
        rep.add("density", "purity_keep2", purity(partial_trace(t, 2), tol))
    return rep, EXIT_OK


def cmd_exclusion_scan(args) -> tuple[Report, int]:
    tol = _resolve_tol(args)
    t = parse_state(args.statefile)
    rep = Report()
    rep.add("state", "n", t.n)
    rep.add("state", "d", t.spec.d)
    rep.add("state", "spin", t.spec.S)
    rep.add("state", "norm", t.norm())
    verdict = is_excluded(t, tol)
    _add_exclusion_section(rep, verdict, symmetric_pairs(t, tol))
    return rep, EXIT_EXCLUDED if verdict.excluded else EXIT_OK


def cmd_schmidt(args) -> tuple[Report, int]:
    rank_tol = args.rank_tol
    mf = parse_matrix(args.matrixfile)
    M = mf.matrix
    if args.normalize:
        M = M / np.linalg.norm(M)
    report, _, _ = schmidt(M, rank_tol)
    rep = Report()
    rep.add("matrix", "d", mf.d)
    rep.add("schmidt", "singular_values", list(report.singular_values))
    rep.add("schmidt", "schmidt_rank", report.schmidt_rank)
    rep.add("schmidt", "strength", report.strength)
    rep.add("schmidt", "discarded_weight", max(0.0, 1.0 - report.singular_values[0] ** 2))
    rep.add("schmidt", "weak_warning", report.strength > WEAK_STRENGTH_WARNING)
    return rep, EXIT_OK


def cmd_pauli_pair(args) -> tuple[Report, int]:
    tol = _resolve_tol(args)
    t1 = parse_state(args.vector1)
    t2 = parse_state(args.vector2)
    if t1.n != 1 or t2.n != 1:
        raise ParseError("pauli-pair needs two single-particle (n=1) state files")
    if not t1.spec.compatible(t2.spec):
        raise ParseError("the two vectors live in different bases")
    psi = t1.amplitudes.ravel()
    phi = t2.amplitudes.ravel()
    if args.normalize:
        psi = psi / np.linalg.norm(psi)
        phi = phi / np.linalg.norm(phi)

    rep = Report()
    rep.add("input", "D", t1.spec.D)
    rep.add("input", "overlap", float(abs(np.vdot(psi, phi))))
    try:
        state = pauli_pair(psi, phi, spec=t1.spec, tol=tol)
    except ExcludedStateError as exc:
        rep.add("exclusion", "excluded", True)
        rep.add("exclusion", "condition", exc.condition)
        return rep, EXIT_EXCLUDED
    rep.add("exclusion", "excluded", False)
    rep.add("exclusion", "condition", "none")
    rep.add("pair", "N", state.norm_constant)
    rep.add("pair", "norm", state.tensor.norm())
    rep.add("pair", "slater_rank", slater_report(state, args.rank_tol, tol).slater_rank)
    if args.out:
        write_state(state.tensor, args.out)
    return rep, EXIT_OK


def _requested_variants(choice: str) -> tuple[HeliumVariant, ...]:
    if choice == "all":
        return VARIANT_ORDER
    return (HeliumVariant(choice),)


def cmd_helium(args) -> tuple[Report, int]:
    tol = _resolve_tol(args)
    rank_tol = args.rank_tol
    requested = _requested_variants(args.variant)

    mf = parse_matrix(args.matrixfile)
    M = mf.matrix
    s = _parse_spin(args.spin)
    s2 = _parse_spin(args.spin2) if args.spin2 is not None else s.copy()
    if args.normalize:
        M = M / np.linalg.norm(M)
        s = s / np.linalg.norm(s)
        s2 = s2 / np.linalg.norm(s2)

    rep = Report()
    rep.add("input", "d", mf.d)
    rep.add("input", "spin", len(s))
    rep.add("input", "variant", args.variant)

    K = overlap_kernel(M)
    rep.add("overlap", "K_re", K.real)
    rep.add("overlap", "K_im", K.imag)
    rep.add("overlap", "spin_overlap", float(abs(np.vdot(s, s2))))

    catalog = exclusion_catalog(M, s, s2, tol)
    for variant in VARIANT_ORDER:
        verdict = catalog[variant]
        rep.add("catalog", variant.value, _verdict_string(verdict.excluded, verdict.condition))
        rep.add("catalog", f"{variant.value}_ratio", verdict.norm_ratio)

    excluded_any = False
    for variant in requested:
        verdict = catalog[variant]
        if verdict.excluded:
            rep.add("build", variant.value, _verdict_string(True, verdict.condition))
            excluded_any = True
            continue
        try:
            state = build_state(variant, M, s, s2, tol=tol)
        except ExcludedStateError as exc:
            rep.add("build", variant.value, _verdict_string(True, exc.condition))
            excluded_any = True
            continue
        rep.add("build", variant.value, "built")
        rep.add("build", f"{variant.value}_N", state.norm_constant)
        rep.add("build", f"{variant.value}_norm", state.tensor.norm())

    sc_report, _, _ = schmidt(M, rank_tol)
    rep.add("schmidt", "singular_values", list(sc_report.singular_values))
    rep.add("schmidt", "schmidt_rank", sc_report.schmidt_rank)
    rep.add("schmidt", "strength", sc_report.strength)
    rep.add("schmidt", "discarded_weight", max(0.0, 1.0 - sc_report.singular_values[0] ** 2))
    rep.add("schmidt", "weak_warning", sc_report.strength > WEAK_STRENGTH_WARNING)

    if sc_report.schmidt_rank == 1:
        psi, phi, _, _ = rank1_truncate(M)
        spec = BasisSpec(d=mf.d, S=len(s), mode_labels=mf.mode_labels,
                         spin_labels=mf.spin_labels if mf.spin_labels and len(mf.spin_labels) == len(s) else None)
        labeled = spec.mode_labels is not None and spec.spin_labels is not None
        try:
            psi_mode = basis_index_of(psi)
            phi_mode = basis_index_of(phi)
            aligned = True
        except LabelError:
            aligned = False
        available = labeled and aligned
        rep.add("quantum-numbers", "available", available)
        if not available:
            rep.add("quantum-numbers", "reason",
                    "basis labels missing" if not labeled else "factors are not basis states")
        else:
            emitted_spatial = False
            for variant in requested:
                try:
                    qns = quantum_number_set(variant, psi_mode, phi_mode, s, s2, spec)
                except LabelError:
                    rep.add("quantum-numbers", f"{variant.value}_spin", "unavailable (superposed spin)")
                    continue
                if not emitted_spatial:
                    rep.add("quantum-numbers", "spatial",
                            [_mode_label_string(lab) for lab in qns.spatial_labels])
                    emitted_spatial = True
                rep.add("quantum-numbers", f"{variant.value}_spin",
                        [str(ms) for ms in qns.spin_labels])
        if HeliumVariant.STAR in requested:
            verdict = pauli_verdict_star(psi, phi, s, tol)
            rep.add("quantum-numbers", "star_pauli",
                    _verdict_string(verdict.excluded, verdict.condition))
            if verdict.excluded:
                excluded_any = True

    return rep, EXIT_EXCLUDED if excluded_any else EXIT_OK


def _add_common_flags(sub, rank_tol: bool = True):
    sub.add_argument("--tol", type=float, default=None,
                     help=f"relative tolerance (default {DEFAULT_TOL}, env FERMI_TOL)")
    if rank_tol:
        sub.add_argument("--rank-tol", type=float, default=DEFAULT_RANK_TOL,
                         help=f"relative singular-value cutoff (default {DEFAULT_RANK_TOL})")
    sub.add_argument("--normalize", action="store_true",
                     help="renormalize inputs instead of rejecting them")
    sub.add_argument("--json", metavar="PATH", default=None,
                     help="also write the report as JSON to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fermiex",
                     description="Multi-fermion state algebra: exclusion and entanglement analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis of a state file")
    p.add_argument("statefile")
    p.add_argument("--pre-antisymmetrize", action="store_true",
                   help="treat the input as a pre-state and antisymmetrize before analysis")
    _add_common_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("helium", help="two-fermion variants from a spatial matrix and spins")
    p.add_argument("matrixfile")
    p.add_argument("--spin", required=True, help="spin vector as re:im,re:im,...")
    p.add_argument("--spin2", default=None, help="second spin vector (defaults to --spin)")
    p.add_argument("--variant", choices=["plus", "minus", "star", "all"], default="all")
    _add_common_flags(p)
    p.set_defaults(func=cmd_helium)

    p = sub.add_parser("exclusion-scan", help="pair-symmetry scan and 0/0 verdict for a pre-state")
    p.add_argument("statefile")
    _add_common_flags(p, rank_tol=False)
    p.set_defaults(func=cmd_exclusion_scan)

    p = sub.add_parser("schmidt", help="singular spectrum of a spatial matrix")
    p.add_argument("matrixfile")
    _add_common_flags(p)
    p.set_defaults(func=cmd_schmidt)

    p = sub.add_parser("pauli-pair", help="antisymmetrized pair of two single-particle vectors")
    p.add_argument("vector1")
    p.add_argument("vector2")
    p.add_argument("--out", default=None, help="write the resulting state file here")
    _add_common_flags(p)
    p.set_defaults(func=cmd_pauli_pair)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep, code = args.func(args)
    except (FermiexError, OSError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(rep.text())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rep.json_obj(), fh, indent=2)
            fh.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
