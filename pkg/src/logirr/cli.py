"""Command-line front end: bound assemblies, exact form tables, invariant
verification suites, the sup-norm box search, and oracle evaluations, with
human, json and csv renderings.

json output is the stable machine interface: keys are sorted, numbers are
rendered once through mpmath at the configured precision, and a fixed seed
makes randomized suites reproducible byte-for-byte.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from mpmath import mp, mpf, fabs, log

from . import __version__, asympt, logforms, polyforms, simforms, valuation
from .asympt import (
    BoundAssemblyError,
    EntropyPattern,
    ExponentProduct,
    LedgerTerm,
    assemble_bound,
    binomial_growth_max,
    log_max_on_interval,
    rukhadze_entropy_pattern,
)
from .exact import GaussianRational, to_mpf
from .expectations import EXPECTED
from .hyper import appell_f1, gauss_2f1, ramanujan_pi, ramanujan_reference
from .logforms import HGParams, inclusion_check, integral_value, linear_form, symmetry_check
from .simforms import HataFamily, denominator_witness, expand_form, hata_bound

BOUND_TARGETS = ("log2-rukhadze", "log2-simple", "pi-hata", "log2log3-hu", "log3-rhin")
FORM_FAMILIES = ("rukhadze", "simple", "hata", "hu", "rhin")
VERIFY_SUITES = ("inclusions", "symmetry", "oracle", "denominators", "profiles")

_CONFIG_KEYS = {
    "precision", "format", "seed", "n", "family", "target", "degree",
    "coeff_bound", "series", "terms", "suite",
}


class UsageError(Exception):
    pass


def parse_config_file(path):
    """Line-oriented key=value with '#' comments; unknown keys rejected."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = value
    return out


def parse_n_range(text):
    """'5' -> [5]; '2..6' -> [2, 3, 4, 5, 6]."""
    text = str(text)
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


# ---------------------------------------------------------------------------
# bound command


def _rukhadze_profile():
    return valuation.phi_step_profile(7, 6, 8)


def bound_rukhadze(dps):
    decay = log_max_on_interval(
        ExponentProduct(factors=((Fraction(0), Fraction(6)),
                                 (Fraction(1), Fraction(8)),
                                 (Fraction(-1), Fraction(-7)))),
        (Fraction(0), Fraction(1)), dps,
    ).value
    growth = binomial_growth_max(rukhadze_entropy_pattern(), (Fraction(7), Fraction(14)), dps).value
    saving = valuation.valuation_asymptotic(_rukhadze_profile(), dps).value
    with mp.workdps(dps):
        terms = [
            LedgerTerm("integral decay", "c0", -decay,
                       "log-max of x^6(1-x)^8/(1+x)^7 on (0,1)"),
            LedgerTerm("lcm growth", "c0", mpf(-8), "lcm of 1..8n"),
            LedgerTerm("large-prime profile saving", "c0", saving,
                       "digamma-weighted (7,6,8) profile"),
            LedgerTerm("coefficient growth", "c1", growth,
                       "binomial-product entropy maximum"),
            LedgerTerm("lcm growth", "c1", mpf(8), "lcm of 1..8n"),
            LedgerTerm("large-prime profile saving", "c1", -saving,
                       "digamma-weighted (7,6,8) profile"),
        ]
    return assemble_bound(terms, dps, label="log2 (7n,6n,8n) family")


def simple_log2_family() -> HataFamily:
    return HataFamily(points=(GaussianRational.of(2),), rates=(1, 1), alpha=1,
                      label="log2 (n,n,n) family")


def hata_pi_family() -> HataFamily:
    return HataFamily(
        points=(GaussianRational.of(2), GaussianRational.of(1, 1)),
        rates=(2, 2, 2), alpha=3, label="Q log2 + Q pi family at (2, 1+i)",
    )


def hu_family() -> HataFamily:
    return HataFamily(
        points=(GaussianRational.of(Fraction(4, 3)), GaussianRational.of(Fraction(3, 2))),
        rates=(2, 2, 2), alpha=3, label="Q log2 + Q log3 family at (4/3, 3/2)",
    )


def cmd_bound(args, cfg):
    dps = cfg["precision"]
    target = args.target
    try:
        if target == "log2-rukhadze":
            report = bound_rukhadze(dps)
        elif target == "log2-simple":
            report = hata_bound(simple_log2_family(), dps)
        elif target == "pi-hata":
            report = hata_bound(hata_pi_family(), dps)
        elif target == "log2log3-hu":
            report = hata_bound(hu_family(), dps)
        elif target == "log3-rhin":
            report = polyforms.rhin_bound(dps)
        else:
            raise UsageError(f"unknown bound target {target!r}")
    except BoundAssemblyError as exc:
        payload = {"target": target, "error": str(exc), "assembled": False}
        emit(payload, cfg)
        return 1
    payload = {"target": target, "assembled": True}
    payload.update(report.as_dict(digits=min(dps, 20)))
    emit(payload, cfg)
    return 0


# ---------------------------------------------------------------------------
# forms command


def _gauss_form_row(params: HGParams, dps):
    form = linear_form(params)
    b, c = inclusion_check(params)
    with mp.workdps(dps):
        residual = fabs(form.value(dps).value)
        return {
            "B": str(form.log_coeff),
            "A": str(-form.const_coeff),
            "scaled_B": str(b),
            "scaled_A": str(-c),
            "abs_form": mp.nstr(residual, 12),
        }


def cmd_forms(args, cfg):
    dps = cfg["precision"]
    ns = parse_n_range(args.n)
    family = args.family
    rows = []
    for n in ns:
        if family == "rukhadze":
            rows.append({"n": n, **_gauss_form_row(HGParams(7 * n, 6 * n, 8 * n, Fraction(2)), dps)})
        elif family == "simple":
            rows.append({"n": n, **_gauss_form_row(HGParams(n, n, n, Fraction(2)), dps)})
        elif family in ("hata", "hu"):
            fam = hata_pi_family() if family == "hata" else hu_family()
            config = fam.at(n)
            target = fam.points[0] if args.target is None else _parse_point(args.target)
            form = expand_form(config, target)
            with mp.workdps(dps):
                rows.append({
                    "n": n,
                    "B": str(form.log_coeff),
                    "A": str(GaussianRational.of(0) - form.const_coeff),
                    "abs_form": mp.nstr(abs(form.value(dps).value), 12),
                })
        elif family == "rhin":
            coeffs = polyforms.rhin_polynomial(n)
            polyforms.hn_validate(coeffs, n, polyforms.RHIN_DELTA)
            forms = polyforms.reduced_forms(coeffs, n, polyforms.RHIN_POINTS)
            with mp.workdps(dps):
                for t, c in forms.constants:
                    v = to_mpf(forms.log_coeff) * log(to_mpf(t)) + to_mpf(c)
                    rows.append({
                        "n": n,
                        "target": str(t),
                        "B": str(forms.log_coeff),
                        "A": str(-c),
                        "abs_form": mp.nstr(fabs(v), 12),
                    })
        else:
            raise UsageError(f"unknown family {family!r}")
    emit({"family": family, "rows": rows}, cfg)
    return 0


def _parse_point(text):
    text = text.strip()
    if text in ("1+i", "1+1i"):
        return GaussianRational.of(1, 1)
    return GaussianRational.of(Fraction(text))


# ---------------------------------------------------------------------------
# verify command


def _suite_inclusions(rng, dps):
    failures = []
    cases = 0
    for _ in range(40):
        n1 = rng.randint(1, 24)
        n0 = rng.randint(0, n1)
        m = rng.randint(0, n1)
        a = rng.choice([Fraction(2), Fraction(3, 2), Fraction(4, 3), Fraction(2, 3)])
        params = HGParams(m, n0, n1, a)
        cases += 1
        try:
            inclusion_check(params)
            if 2 * m <= n0 + n1:
                inclusion_check(params, improved=True)
        except ArithmeticError as exc:
            failures.append(f"inclusion {params}: {exc}")
    # polynomial-in-y family
    for coeffs, n in (((1,), 0), ((0, 1), 1), ((0, 0, 0, 0, 0, 0, -1, 6), 7)):
        cases += 1
        try:
            polyforms.gn_inclusion_check(coeffs, n)
        except ArithmeticError as exc:
            failures.append(f"gn inclusion degree {len(coeffs) - 1}: {exc}")
    for n in (1, 2, 3, 4):
        cases += 1
        try:
            polyforms.hn_simultaneous_forms(
                polyforms.rhin_polynomial(n), n,
                polyforms.RHIN_DELTA, polyforms.RHIN_POINTS,
            )
        except (ArithmeticError, ValueError) as exc:
            failures.append(f"six-factor forms n={n}: {exc}")
    return cases, failures


def _suite_symmetry(rng, dps):
    failures = []
    cases = 0
    for _ in range(60):
        n1 = rng.randint(1, 20)
        n0 = rng.randint(0, n1)
        lo = max(0, 2 * n0 - n1)  # keep the swapped tuple valid too
        m = rng.randint(0, (n0 + n1) // 2)
        a = rng.choice([Fraction(2), Fraction(3, 2), Fraction(4, 3), Fraction(2, 3)])
        try:
            params = HGParams(m, n0, n1, a)
            params.swapped()
        except ValueError:
            continue
        cases += 1
        if not symmetry_check(params):
            failures.append(f"symmetry failed for {params}")
    return cases, failures


def _suite_oracle(rng, dps):
    failures = []
    cases = 0
    for m, n0, n1, a in ((0, 0, 0, Fraction(2)), (1, 1, 1, Fraction(2)),
                         (7, 6, 8, Fraction(2)), (2, 1, 2, Fraction(3, 2))):
        cases += 1
        params = HGParams(m, n0, n1, a)
        exact = linear_form(params).value(dps).value
        orc = integral_value(params, dps).value
        if fabs(exact - orc) > mpf(10) ** (-(dps - 10)):
            failures.append(f"oracle mismatch at {params}")
    return cases, failures


def _suite_denominators(rng, dps):
    failures = []
    cases = 0
    fam = hata_pi_family()
    for n in (1, 2, 3):
        config = fam.at(n)
        for target in (GaussianRational.of(1),) + fam.points:
            cases += 1
            rep = denominator_witness(config, target)
            if not rep.ok:
                failures.append(f"witness failed at n={n} target {target}")
    return cases, failures


def _suite_profiles(rng, dps):
    failures = []
    F = Fraction
    expected_768 = (
        (F(1, 8), F(1, 7), 1), (F(1, 4), F(2, 7), 1), (F(3, 8), F(3, 7), 1),
        (F(1, 2), F(4, 7), 1), (F(2, 3), F(5, 7), 1), (F(5, 6), F(6, 7), 1),
    )
    prof = valuation.phi_step_profile(7, 6, 8)
    cases = 2
    if prof.intervals != expected_768:
        failures.append("carry profile of (7,6,8) differs from the published intervals")
    prof2, _cert = valuation.minimize_varpi(2, 2, 2, 3)
    if prof2.intervals != ((F(1, 2), F(2, 3), 1),):
        failures.append("minimized profile of (2,2,2;3) is not [1/2, 2/3)")
    return cases, failures


def cmd_verify(args, cfg):
    rng = random.Random(cfg["seed"])
    dps = cfg["precision"]
    suites = VERIFY_SUITES if args.suite == "all" else (args.suite,)
    results = []
    any_failed = False
    for suite in suites:
        fn = {
            "inclusions": _suite_inclusions,
            "symmetry": _suite_symmetry,
            "oracle": _suite_oracle,
            "denominators": _suite_denominators,
            "profiles": _suite_profiles,
        }[suite]
        cases, failures = fn(rng, dps)
        ok = not failures
        any_failed = any_failed or not ok
        results.append({
            "suite": suite,
            "cases": cases,
            "status": "pass" if ok else "fail",
            "failures": failures,
        })
    emit({"suites": results}, cfg)
    return 1 if any_failed else 0


# ---------------------------------------------------------------------------
# search and oracle commands


def cmd_search(args, cfg):
    dps = cfg["precision"]
    with mp.workdps(dps + 10):
        hi = (mp.sqrt(2) - 1) ** 2
    result = polyforms.search_gstar(
        args.degree, args.coeff_bound, (mpf(0), hi), dps,
        require_constant_term=args.require_constant_term,
    )
    emit({
        "degree": args.degree,
        "coeff_bound": args.coeff_bound,
        "winner": list(result.coeffs),
        "sup_norm": mp.nstr(result.sup_norm.value, 15),
        "sup_norm_root": mp.nstr(result.sup_norm_root.value, 15),
        "finalists_evaluated": result.scanned_exactly,
    }, cfg)
    return 0


def cmd_oracle(args, cfg):
    dps = cfg["precision"]
    if args.op == "ramanujan":
        series = int(args.series)
        terms = int(args.terms)
        val = ramanujan_pi(series, terms, dps)
        ref = ramanujan_reference(series, dps)
        with mp.workdps(dps):
            digits = int(-mp.log10(fabs(val.value - ref.value))) if val.value != ref.value else dps
        emit({
            "op": "ramanujan", "series": series, "terms": terms,
            "value": mp.nstr(val.value, min(dps, 40)),
            "reference": mp.nstr(ref.value, min(dps, 40)),
            "agreement_digits": digits,
        }, cfg)
        return 0
    if args.op == "2f1":
        a, b, c = (Fraction(x) for x in (args.a, args.b, args.c))
        z = _parse_complex(args.z)
        val = gauss_2f1(a, b, c, z, dps)
        emit({"op": "2f1", "value": mp.nstr(val.value, min(dps, 40))}, cfg)
        return 0
    if args.op == "f1":
        a, b1, b2, c = (Fraction(x) for x in (args.a, args.b, args.b2, args.c))
        x = _parse_complex(args.x)
        y = _parse_complex(args.y)
        val = appell_f1(a, b1, b2, c, x, y, dps)
        emit({"op": "f1", "value": mp.nstr(val.value, min(dps, 40))}, cfg)
        return 0
    raise UsageError(f"unknown oracle op {args.op!r}")


def _parse_complex(text):
    text = str(text).strip()
    try:
        return to_mpf(Fraction(text))
    except ValueError:
        return complex(text.replace("i", "j"))


# ---------------------------------------------------------------------------
# rendering


def emit(payload, cfg):
    fmt = cfg["format"]
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    elif fmt == "csv":
        for line in _csv_lines(payload):
            print(line)
    else:
        _print_human(payload)


def _csv_lines(payload, prefix=""):
    lines = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            lines.extend(_csv_lines(payload[key], f"{prefix}{key}."))
    elif isinstance(payload, (list, tuple)):
        for i, item in enumerate(payload):
            lines.extend(_csv_lines(item, f"{prefix}{i}."))
    else:
        lines.append(f"{prefix[:-1]},{payload}")
    return lines


def _print_human(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for key in payload:
            value = payload[key]
            if isinstance(value, (dict, list, tuple)):
                print(f"{pad}{key}:")
                _print_human(value, indent + 1)
            else:
                print(f"{pad}{key}: {value}")
    elif isinstance(payload, (list, tuple)):
        for item in payload:
            if isinstance(item, (dict, list, tuple)):
                _print_human(item, indent)
                print()
            else:
                print(f"{pad}{item}")
    else:
        print(f"{pad}{payload}")


# ---------------------------------------------------------------------------
# argument plumbing


def _common_flags(default):
    """Shared flags; the subcommand copy suppresses defaults so values given
    before the subcommand survive."""
    common = argparse.ArgumentParser(add_help=False)
    kw = (lambda v: {"default": v}) if default else (lambda v: {"default": argparse.SUPPRESS})
    common.add_argument("--precision", type=int,
                        help="working decimal digits (>= 20)", **kw(60))
    common.add_argument("--format", choices=("human", "json", "csv"), **kw("human"))
    common.add_argument("--config", help="key=value config file", **kw(None))
    common.add_argument("--seed", type=int,
                        help="seed for randomized suites", **kw(0))
    return common


def build_parser():
    root_common = _common_flags(default=True)
    sub_common = _common_flags(default=False)
    parser = argparse.ArgumentParser(
        prog="logirr",
        description="exact log linear forms and irrationality exponent bounds",
        parents=[root_common],
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="assemble a named exponent bound",
                       parents=[sub_common])
    p.add_argument("target", choices=BOUND_TARGETS)
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("forms", help="exact coefficient tables",
                       parents=[sub_common])
    p.add_argument("family", choices=FORM_FAMILIES)
    p.add_argument("--n", default="1", help="index or range lo..hi")
    p.add_argument("--target", default=None, help="target point for simultaneous families")
    p.set_defaults(fn=cmd_forms)

    p = sub.add_parser("verify", help="run an invariant suite",
                       parents=[sub_common])
    p.add_argument("suite", choices=VERIFY_SUITES + ("all",))
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="integer polynomial sup-norm box search",
                       parents=[sub_common])
    p.add_argument("--degree", type=int, default=7)
    p.add_argument("--coeff-bound", dest="coeff_bound", type=int, default=10)
    p.add_argument("--require-constant-term", action="store_true")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("oracle", help="hypergeometric oracle evaluations",
                       parents=[sub_common])
    p.add_argument("op", choices=("2f1", "f1", "ramanujan"))
    p.add_argument("--series", default="39")
    p.add_argument("--terms", default="5")
    p.add_argument("--a", default="1")
    p.add_argument("--b", default="1")
    p.add_argument("--b2", default="1")
    p.add_argument("--c", default="2")
    p.add_argument("--z", default="1/2")
    p.add_argument("--x", default="1/2")
    p.add_argument("--y", default="0")
    p.set_defaults(fn=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = {
            "precision": args.precision,
            "format": args.format,
            "seed": args.seed,
        }
        if args.config:
            file_cfg = parse_config_file(args.config)
            for key in ("precision", "seed"):
                if key in file_cfg:
                    cfg[key] = int(file_cfg[key])
            if "format" in file_cfg:
                if file_cfg["format"] not in ("human", "json", "csv"):
                    raise UsageError(f"bad format {file_cfg['format']!r}")
                cfg["format"] = file_cfg["format"]
        if cfg["precision"] < 20:
            raise UsageError("precision must be at least 20 digits")
        with mp.workdps(cfg["precision"]):
            return args.fn(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
