"""Command-line front end: ``graded-forms <subcommand> ...``.

Every artifact is read and written as JSON.  Exit status is 0 on success,
1 with ``{"error": code, "detail": ...}`` when a precondition fails and 2 for
malformed input or arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import acceptance
from .brackets import (
    BracketParams,
    heat_coeffs,
    lie_bracket_Q,
    rc_bracket_J,
    rc_bracket_QP,
    rc_bracket_QP_m,
    rc_bracket_QP_m_closed,
    series_lie_bracket,
)
from .errors import GradedFormsError
from .halfint import DirichletCharacter, HalfIntForm, q_shimura, q_shintani, shimura_coeffs, theta
from .jacobilike import (
    JacobiLikeForm,
    canonical_lift,
    ck_lift,
    hecke_TJ,
    jl_check,
    pi_map,
    transfer,
    xi_hat,
)
from .modforms import ModularForm, delta, eisenstein, hecke_T, is_modular
from .psido import PsiDO, psido_bracket
from .qseries import QSeries
from .quasipoly import (
    QuasiPolynomial,
    certify_quasimodular,
    derivative_polynomial,
    e2_polynomial,
    hecke_TP,
    xi_lift,
)


class _Malformed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Malformed(message)


def dumps(obj) -> str:
    """Deterministic JSON text with a trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _default_prec() -> int:
    raw = os.environ.get("GRADED_FORMS_PREC_DEFAULT")
    if raw is None:
        return 20
    try:
        val = int(raw)
    except ValueError:
        raise _Malformed(f"GRADED_FORMS_PREC_DEFAULT must be an integer, got {raw!r}")
    if val < 1:
        raise _Malformed("GRADED_FORMS_PREC_DEFAULT must be positive")
    return val


def _load(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise _Malformed(f"cannot read {path}: {exc.strerror}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Malformed(f"{path}: invalid JSON ({exc.msg})")


def _read(path, cls):
    if path is None:
        raise _Malformed("--in is required")
    try:
        return cls.from_json(_load(path))
    except (ValueError, TypeError, KeyError) as exc:
        raise _Malformed(f"{path}: {exc}")


def _half(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _Malformed(f"not a rational number: {text!r}")


def _form(name: str, prec: int):
    if name == "Delta":
        return delta(prec)
    if name == "E2poly":
        return e2_polynomial(prec)
    if name == "theta":
        return HalfIntForm(1, 4, theta(prec))
    m = re.fullmatch(r"E(\d+)", name)
    if not m:
        raise _Malformed(f"unknown form {name!r}; use E<k>, E2poly, Delta or theta")
    return ModularForm(int(m.group(1)), eisenstein(int(m.group(1)), prec))


# subcommand handlers return a JSON-ready object


def cmd_series(a):
    prec = a.prec or _default_prec()
    return _form(a.form, prec).to_json()


def cmd_lift(a):
    kind = a.kind
    if kind in ("xi", "derivative"):
        f = _read(a.inp, ModularForm)
        return (xi_lift(f, a.depth) if kind == "xi" else derivative_polynomial(f, a.depth)).to_json()
    if kind == "ck":
        f = _read(a.inp, ModularForm)
        return ck_lift(f, a.w, f.weight - 2 * a.w, a.delta, a.K).to_json()
    if kind == "xihat":
        return xi_hat(_read(a.inp, ModularForm), a.delta, a.K).to_json()
    if kind == "canonical":
        return canonical_lift(_read(a.inp, QuasiPolynomial), a.delta, a.K).to_json()
    if kind == "transfer":
        return transfer(_read(a.inp, QuasiPolynomial), a.depth, a.delta).to_json()
    # pi
    return pi_map(_read(a.inp, JacobiLikeForm), a.depth).to_json()


def _params(a):
    return BracketParams(a.n, _half(a.mu1), _half(a.mu2), a.delta1, a.delta2)


def cmd_bracket(a):
    kind = a.kind
    if kind == "heat":
        return heat_coeffs(_read(a.inp, JacobiLikeForm), _half(a.mu1), a.times).to_json()
    if kind == "psido":
        return psido_bracket(_read(a.inp, PsiDO), _read(a.inp2, PsiDO)).to_json()
    if kind == "lieX":
        return series_lie_bracket(_read(a.inp, JacobiLikeForm), _read(a.inp2, JacobiLikeForm),
                                  a.xi1, a.xi2).to_json()
    if kind == "rcJ":
        return rc_bracket_J(_read(a.inp, JacobiLikeForm), _read(a.inp2, JacobiLikeForm),
                            _params(a)).to_json()
    F1, F2 = _read(a.inp, QuasiPolynomial), _read(a.inp2, QuasiPolynomial)
    if kind == "lieQ":
        return lie_bracket_Q(F1, F2, a.delta1, a.delta2).to_json()
    if kind == "rcQP":
        return rc_bracket_QP(F1, F2, _params(a)).to_json()
    fn = rc_bracket_QP_m_closed if a.closed else rc_bracket_QP_m
    return fn(F1, F2, a.depth, _params(a)).to_json()


def cmd_hecke(a):
    if a.kind == "modular":
        f = _read(a.inp, ModularForm)
        k = f.weight if a.weight is None else a.weight
        return ModularForm(k, hecke_T(a.prime, k, f.series)).to_json()
    if a.kind == "qp":
        return hecke_TP(a.prime, _read(a.inp, QuasiPolynomial)).to_json()
    return hecke_TJ(a.prime, _read(a.inp, JacobiLikeForm)).to_json()


def cmd_certify(a):
    if a.kind == "modular":
        f = _read(a.inp, ModularForm)
        cert = is_modular(f.series, f.weight if a.weight is None else a.weight)
    elif a.kind == "qp":
        cert = certify_quasimodular(_read(a.inp, QuasiPolynomial))
    else:
        cert = jl_check(_read(a.inp, JacobiLikeForm))
    return cert.to_json()


def _character(a):
    return DirichletCharacter(a.modulus)


def cmd_shimura(a):
    if a.qp is not None:
        F = _read(a.qp, QuasiPolynomial)
        return q_shimura(F, a.t, a.m, a.mprime, a.r, _character(a), a.prec_out).to_json()
    g = _read(a.inp, HalfIntForm)
    k = (g.twice_weight - 1) // 2
    return {"weight": 2 * k,
            "series": shimura_coeffs(g.series, a.t, k, _character(a), a.prec_out).to_json()}


def cmd_shintani(a):
    th = _read(a.inp, QSeries)
    return q_shintani(th, _half(a.lam), a.m, a.mprime, a.r).to_json()


def cmd_selftest(a):
    ids = a.only or [i for i, _, _ in acceptance.CRITERIA]
    results = [acceptance.run_criterion(i) for i in ids]
    return {"criteria": results, "passed": all(r["passed"] for r in results)}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graded-forms", description=__doc__.splitlines()[0])
    p.add_argument("--out", help="write JSON here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp, second=False):
        sp.add_argument("--in", dest="inp", help="input JSON file, or - for stdin")
        if second:
            sp.add_argument("--in2", dest="inp2", help="second input JSON file")

    s = sub.add_parser("series", help="generator q-expansions")
    s.add_argument("--form", required=True, help="E<k>, E2poly, Delta or theta")
    s.add_argument("--prec", type=int)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("lift", help="liftings and projections")
    s.add_argument("kind", choices=["xi", "ck", "xihat", "canonical", "transfer", "derivative", "pi"])
    with_input(s)
    s.add_argument("--depth", type=int, default=0)
    s.add_argument("--delta", type=int, default=0)
    s.add_argument("--w", type=int, default=0)
    s.add_argument("--K", type=int)
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("bracket", help="Lie, operator, heat and Rankin-Cohen brackets")
    s.add_argument("kind", choices=["lieQ", "lieX", "psido", "rcJ", "rcQP", "rcQPm", "heat"])
    with_input(s, second=True)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--mu1", default="0", help="rational, e.g. 1/2 (heat uses --mu1)")
    s.add_argument("--mu2", default="0")
    s.add_argument("--delta1", type=int, default=0)
    s.add_argument("--delta2", type=int, default=0)
    s.add_argument("--xi1", type=int, default=0)
    s.add_argument("--xi2", type=int, default=0)
    s.add_argument("--depth", type=int, default=0)
    s.add_argument("--times", type=int, default=1)
    s.add_argument("--closed", action="store_true", help="rcQPm via the closed formula")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("hecke", help="Hecke operators")
    s.add_argument("kind", choices=["modular", "qp", "jl"])
    with_input(s)
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--weight", type=int)
    s.set_defaults(func=cmd_hecke)

    s = sub.add_parser("certify", help="modularity and quasimodularity certificates")
    s.add_argument("--kind", choices=["modular", "qp", "jl"], required=True)
    with_input(s)
    s.add_argument("--weight", type=int)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("shimura", help="Shimura coefficient map and its quasimodular lift")
    with_input(s)
    s.add_argument("--qp", help="quasimodular polynomial input for the lifted map")
    s.add_argument("--t", type=int, default=1)
    s.add_argument("--modulus", type=int, default=4)
    s.add_argument("--prec-out", type=int, default=20)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--mprime", type=int, default=0)
    s.add_argument("--r", type=int, default=0)
    s.set_defaults(func=cmd_shimura)

    s = sub.add_parser("shintani", help="quasimodular lift of a supplied theta image")
    with_input(s)
    s.add_argument("--lam", required=True)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--mprime", type=int, default=0)
    s.add_argument("--r", type=int, default=0)
    s.set_defaults(func=cmd_shintani)

    s = sub.add_parser("selftest", help="run the acceptance suite")
    s.add_argument("--only", type=int, nargs="+", choices=range(1, 13), metavar="N")
    s.set_defaults(func=cmd_selftest)
    return p


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    out = None
    try:
        args = build_parser().parse_args(argv)
        out = args.out
        result = args.func(args)
    except _Malformed as exc:
        sys.stdout.write(dumps({"error": "malformed_input", "detail": str(exc)}))
        return 2
    except GradedFormsError as exc:
        sys.stdout.write(dumps({"error": exc.code, "detail": exc.detail}))
        return 1
    _emit(dumps(result), out)
    if args.func is cmd_selftest and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
