"""Command line front end: orchestrate the modules, emit deterministic reports.

Reports are JSON with sorted keys (text mode renders the same tree);
exit code 0 means success, 1 means a verification failed and the report
carries the witness or the exhausted bound, 2 means the invocation or
its input files were unusable.
"""

import argparse
import json
import sys
from fractions import Fraction

from .degen import (
    PhiMorphism,
    associated_graded,
    check_s_phi_type,
    homological_report,
    infer_phi,
    matches_twisted,
    strict_pairs_from_rules,
)
from .demos import demo_a2_schubert, demo_g24
from .exact import Q
from .freealg import GeneratorSet, RewriteSystem
from .latticekit import FiniteLattice, LatticeError
from .semigroup import AffineSemigroup
from . import stringgeo


class UsageFault(Exception):
    """Bad invocation or unusable input: exit code 2."""


class CheckFault(Exception):
    """A verification or bounded search failed: exit code 1."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}


# ---------------------------------------------------------------------------
# plumbing


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as err:
        raise UsageFault(f"cannot read {path}: {err.strerror}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageFault(
            f"malformed JSON in {path} at line {err.lineno} column {err.colno}: {err.msg}"
        )


def _int_list(text, flag):
    if text.strip() == "":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageFault(f"{flag} wants comma-separated integers, got {text!r}")


def _rational(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageFault(f"--q wants a rational number, got {text!r}")
    if value in (0, 1, -1):
        raise UsageFault("--q must avoid 0, 1 and -1")
    return value


def _text_lines(value, key, indent):
    pad = "  " * indent
    label = f"{pad}{key}: " if key is not None else pad
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"] if key is not None else []
        for sub in sorted(value):
            lines.extend(_text_lines(value[sub], sub, indent + (key is not None)))
        return lines
    if isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            return [label + json.dumps(value)]
        lines = [f"{pad}{key}:"]
        for pos, item in enumerate(value):
            lines.extend(_text_lines(item, str(pos), indent + 1))
        return lines
    return [label + json.dumps(value)]


def _emit(report, args):
    if getattr(args, "text", False):
        body = "\n".join(_text_lines(report, None, 0)) + "\n"
    else:
        body = json.dumps(report, sort_keys=True, indent=2) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(body)
    else:
        sys.stdout.write(body)


def _vectors(vs):
    return [list(v) for v in vs]


# ---------------------------------------------------------------------------
# semigroup subcommands


def _load_semigroup(path):
    data = _load_json(path)
    try:
        return AffineSemigroup.from_json_dict(data)
    except (KeyError, TypeError) as err:
        raise UsageFault(f"{path} is not a semigroup description: {err}")
    except ValueError as err:
        raise UsageFault(f"{path}: {err}")


def _cmd_semigroup(args):
    S = _load_semigroup(args.input)
    if args.action == "analyze":
        verdict = S.is_normal(args.bound)
        return {
            "rank": S.rank(),
            "ambient_dimension": S.ambient_rank,
            "generators": _vectors(S.generators),
            "hilbert_basis": _vectors(S.hilbert_basis()),
            "normal": verdict.normal,
            "normality_mode": verdict.mode,
            "provenance": {
                "hilbert_basis": "irreducible generators, verified minimal by pairwise reduction",
                "normal": "exact saturation check on the fundamental region"
                if verdict.mode == "exact"
                else f"lattice points of the cone checked up to coordinate sum {verdict.bound}",
            },
        }
    if args.action == "presentation":
        pres = S.presentation(args.bound)
        return {
            "pairs": [[list(p.left), list(p.right)] for p in pres.pairs],
            "certified_bound": pres.certified_bound,
            "provenance": {
                "pairs": "congruence generators; fiber graphs connected up to the certified bound"
            },
        }
    if args.action == "normal":
        verdict = S.is_normal(args.bound)
        report = {
            "normal": verdict.normal,
            "mode": verdict.mode,
            "bound": verdict.bound,
            "counterexample": list(verdict.counterexample)
            if verdict.counterexample
            else None,
        }
        if not verdict.normal:
            raise CheckFault("semigroup is not normal", report)
        return report
    # gorenstein
    bound = args.bound if args.bound is not None else 12
    report = homological_report(S, bound)
    body = {
        "status": report.gorenstein.status,
        "witness": list(report.gorenstein.witness)
        if report.gorenstein.witness
        else None,
        "bound": report.gorenstein.bound,
        "local_dimension": report.local_dimension,
        "provenance": {
            "status": "interior point whose shifted semigroup equals the relative interior"
        },
    }
    if report.gorenstein.status != "witness":
        raise CheckFault(
            f"no Gorenstein witness up to coordinate sum {bound}", body
        )
    return body


# ---------------------------------------------------------------------------
# lattice subcommands


def _load_lattice(args):
    if args.builtin:
        if args.builtin != "Pi":
            raise UsageFault(f"unknown builtin lattice {args.builtin!r}")
        if args.u is None or args.v is None:
            raise UsageFault("--builtin Pi needs --u and --v")
        try:
            return FiniteLattice.pi(args.u, args.v)
        except LatticeError as err:
            raise UsageFault(str(err))
    if not args.input:
        raise UsageFault("lattice commands need an input file or --builtin")
    data = _load_json(args.input)
    try:
        return FiniteLattice.from_json_dict(data)
    except (KeyError, TypeError) as err:
        raise UsageFault(f"{args.input} is not a lattice description: {err}")
    except LatticeError as err:
        raise UsageFault(f"{args.input}: {err}")


def _cmd_lattice(args):
    lattice = _load_lattice(args)
    verdict = lattice.check_distributive()
    if args.action == "check":
        report = {
            "elements": len(lattice.elements),
            "cover_pairs": len(lattice.cover_pairs()),
            "join_irreducibles": len(lattice.join_irreducibles()),
            "distributive": verdict.distributive,
            "witness": [str(x) for x in verdict.witness] if verdict.witness else None,
        }
        if not verdict.distributive:
            raise CheckFault("lattice is not distributive", report)
        return report
    # str
    if not verdict.distributive:
        raise CheckFault(
            "lattice is not distributive",
            {"witness": [str(x) for x in verdict.witness]},
        )
    data = lattice.str_semigroup()
    S = data.semigroup
    pres = S.presentation()
    normal = S.is_normal()
    report = {
        "elements": len(lattice.elements),
        "join_irreducibles": len(lattice.join_irreducibles()),
        "inequalities": list(data.inequality_text),
        "hilbert_basis": _vectors(S.hilbert_basis()),
        "presentation": {
            "pairs": [[list(p.left), list(p.right)] for p in pres.pairs],
            "certified_bound": pres.certified_bound,
        },
        "normal": normal.normal,
        "provenance": {
            "hilbert_basis": "membership patterns of the lattice elements, verified irreducible",
            "presentation": "congruence generators with connected fibers up to the certified bound",
            "normal": "exact saturation check",
        },
    }
    if not normal.normal:
        raise CheckFault("str semigroup is not normal", report)
    return report


# ---------------------------------------------------------------------------
# algebra subcommands


def _algebra_bundle(args):
    data = _load_json(args.input)
    try:
        system = RewriteSystem.from_json_dict(data["algebra"])
    except KeyError:
        raise UsageFault(f"{args.input} needs an 'algebra' entry")
    except ValueError as err:
        raise UsageFault(f"{args.input}: {err}")
    S = phi = None
    if "semigroup" in data:
        S = AffineSemigroup.from_json_dict(data["semigroup"])
        if "phi" in data:
            phi = PhiMorphism.from_json_dict(data["phi"])
        else:
            phi = infer_phi(S, strict_pairs_from_rules(system, S))
            if phi is None:
                raise CheckFault(
                    "no filtration functional is compatible with the relations"
                )
        gens = GeneratorSet(
            system.gens.names, system.gens.degrees, phi.weights(S)
        )
        system = RewriteSystem(gens, system.rules)
    return system, S, phi, data


def _cmd_algebra(args):
    system, S, phi, data = _algebra_bundle(args)
    try:
        completed = system.complete(args.cap)
    except (ValueError, AssertionError) as err:
        raise CheckFault(f"completion failed below weight cap {args.cap}: {err}")
    if args.action == "present":
        return {
            "rules": len(completed.rules),
            "certificate": {
                "cap": completed.certificate.cap,
                "ambiguities": len(completed.certificate.ambiguities),
            },
            "system": completed.as_json_dict(),
            "provenance": {
                "system": "all overlap ambiguities below the cap resolve to zero"
            },
        }
    if S is None or phi is None:
        raise UsageFault("this action needs a 'semigroup' entry in the input")
    if args.action == "check-type":
        report = check_s_phi_type(completed, S, phi)
        body = {
            "phi": list(phi.vector),
            "generator_weights": list(phi.weights(S)),
            "is_type": report.is_type,
            "failures": list(report.failures),
            "straightening": [
                {
                    "pair": k,
                    "larger_monomial": list(big),
                    "smaller_monomial": list(small),
                    "scalar": str(d),
                }
                for k, big, small, d, _ in report.straightening
            ],
        }
        if not report.is_type:
            raise CheckFault("the algebra is not of semigroup type", body)
        return body
    # gr
    graded = associated_graded(completed, S, phi).complete(args.cap)
    body = {
        "phi": list(phi.vector),
        "system": graded.as_json_dict(),
        "provenance": {
            "system": "weight-top parts of the completed relations, recompleted"
        },
    }
    if "matrix" in data:
        from .twisted import TwistedAlgebra, restrict_to_semigroup

        twisted = TwistedAlgebra(S, restrict_to_semigroup(data["matrix"], Q, S))
        outcome = matches_twisted(completed, S, phi, twisted, args.bound)
        body["isomorphic_to_twist"] = outcome.isomorphic
        body["bound"] = outcome.bound
        if not outcome.isomorphic:
            raise CheckFault("associated graded differs from the requested twist", body)
    return body


# ---------------------------------------------------------------------------
# stringcone subcommands


def _stringcone_setup(args):
    spec = _load_json(args.input) if args.input else {}
    label = args.type or spec.get("type")
    if label:
        datum = stringgeo.RootDatum.builtin(label)
    elif "cartan" in spec:
        datum = stringgeo.RootDatum.from_json_dict(spec)
    else:
        raise UsageFault("stringcone needs --type or an input file with a cartan matrix")
    word = _int_list(args.word, "--word") if args.word else tuple(spec.get("word", ()))
    if not word:
        raise UsageFault("stringcone needs --word")
    rows = None
    cone_spec = spec.get("cone")
    if args.inequalities:
        try:
            rows = json.loads(args.inequalities)
        except json.JSONDecodeError as err:
            raise UsageFault(f"--inequalities is not JSON: {err.msg}")
    elif isinstance(cone_spec, dict):
        rows = cone_spec.get("inequalities")
    cone = stringgeo.string_cone(datum, word, rows)
    return datum, cone, spec


def _cmd_stringcone(args):
    if args.count:
        args.action = "count"
    if args.action is None:
        raise UsageFault("stringcone needs an action: build, count or faces")
    try:
        datum, cone, spec = _stringcone_setup(args)
    except ValueError as err:
        raise CheckFault(str(err))
    wsg = stringgeo.weighted_semigroup(cone)
    if args.action == "build":
        return {
            "type": datum.name,
            "word": list(cone.word),
            "cone": {
                "inequalities": _vectors(cone.rows),
                "provenance": cone.provenance,
            },
            "weighted_rows": _vectors(wsg.rows),
        }
    I = _int_list(args.I, "--I") if args.I is not None else tuple(spec.get("I", ()))
    w_word = None
    if args.w is not None:
        w_word = _int_list(args.w, "--w")
    elif "w" in spec:
        w_word = tuple(spec["w"])
    try:
        cut = stringgeo.faces(wsg, I=I, w_word=w_word)
    except ValueError as err:
        raise CheckFault(str(err))
    if args.action == "count":
        lam = (
            _int_list(args.lam, "--lambda")
            if args.lam
            else tuple(spec.get("lambda", ()))
        )
        if len(lam) != datum.rank:
            raise UsageFault(f"--lambda wants {datum.rank} entries")
        points = stringgeo.count_points(cut, lam)
        dim = stringgeo.weyl_dim(datum, lam)
        return {"points": points, "weyl_dim": dim, "match": points == dim}
    # faces
    zero = tuple(tuple(0 for _ in range(wsg.nvars)) for _ in range(wsg.nvars))
    try:
        result = stringgeo.schubert_toric_algebra(cut, zero, bound=args.bound)
    except ValueError as err:
        raise CheckFault(str(err))
    return {
        "type": datum.name,
        "word": list(cone.word),
        "schubert_word": None if w_word is None else list(w_word),
        "parabolic_indices": list(I),
        "zero_coordinates": list(cut.zero_vars),
        "hilbert_basis": _vectors(result.semigroup.hilbert_basis()),
        "required_bound": result.required_bound,
        "bound": result.bound,
        "provenance": {
            "hilbert_basis": "harvest up to the certified bound, reduced to irreducibles"
        },
    }


# ---------------------------------------------------------------------------
# demos


_G24_STAGES = (
    ("type_check", lambda rep: rep["type_check"]["is_type"]),
    ("standard_monomials", lambda rep: rep["standard_monomials"]["independent"]),
    ("degeneration", lambda rep: rep["degeneration"]["isomorphic_to_twist"]),
    ("order_basis", lambda rep: rep["order_basis"]["holds"]),
    (
        "graded_vs_twisted",
        lambda rep: rep["graded_vs_twisted"]["dimensions_agree"]
        and rep["graded_vs_twisted"]["rules_identical"],
    ),
    (
        "homological",
        lambda rep: rep["homological"]["domain"]
        and rep["homological"]["satisfies_chi"]
        and rep["homological"]["as_cohen_macaulay"],
    ),
)


def _cmd_demo(args):
    q0 = _rational(args.q) if args.q else None
    if args.which == "g24":
        bound = args.bound if args.bound is not None else 5
        report = demo_g24(q0=q0, bound=bound, cap=args.cap)
        for stage, passed in _G24_STAGES:
            if not passed(report):
                report["failed_stage"] = stage
                raise CheckFault(f"stage {stage} failed", report)
        return report
    # a2-schubert
    w_word = _int_list(args.w, "--w") if args.w is not None else None
    I = _int_list(args.I, "--I") if args.I is not None else ()
    try:
        report = demo_a2_schubert(w_word=w_word, I=I, q0=q0, bound=args.bound)
    except ValueError as err:
        raise CheckFault(str(err))
    # character counts must equal module dimensions on the full flag;
    # proper Schubert slices are genuinely smaller, so no check there
    if w_word is None and not I and not report["all_match"]:
        report["failed_stage"] = "counts"
        raise CheckFault("stage counts failed", report)
    return report


# ---------------------------------------------------------------------------
# parser


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    style = common.add_mutually_exclusive_group()
    style.add_argument("--json", dest="text", action="store_false", default=False,
                       help="JSON output (default)")
    style.add_argument("--text", dest="text", action="store_true",
                       help="plain text rendering of the same report")
    common.add_argument("--out", metavar="PATH", help="write the report to a file")

    parser = argparse.ArgumentParser(
        prog="qtoric",
        description="exact computations on quantum affine toric degenerations",
    )
    tree = parser.add_subparsers(dest="command", required=True)

    sg = tree.add_parser("semigroup", parents=[common], help="positive affine semigroups")
    sg.add_argument("action", choices=["analyze", "presentation", "normal", "gorenstein"])
    sg.add_argument("input", help="JSON file with a 'generators' list")
    sg.add_argument("--bound", type=int, default=None,
                    help="search bound (gorenstein default 12)")
    sg.set_defaults(handler=_cmd_semigroup)

    lat = tree.add_parser("lattice", parents=[common], help="finite distributive lattices")
    lat.add_argument("action", choices=["str", "check"])
    lat.add_argument("input", nargs="?", help="JSON lattice description")
    lat.add_argument("--builtin", help="builtin family name (Pi)")
    lat.add_argument("--u", type=int)
    lat.add_argument("--v", type=int)
    lat.set_defaults(handler=_cmd_lattice)

    alg = tree.add_parser("algebra", parents=[common], help="presented graded algebras")
    alg.add_argument("action", choices=["check-type", "gr", "present"])
    alg.add_argument("input", help="JSON file with algebra (and semigroup, phi)")
    alg.add_argument("--cap", type=int, default=10, help="weight cap for completion")
    alg.add_argument("--bound", type=int, default=5, help="comparison bound")
    alg.set_defaults(handler=_cmd_algebra)

    sc = tree.add_parser("stringcone", parents=[common], help="string cones and faces")
    sc.add_argument("action", nargs="?", choices=["build", "count", "faces"])
    sc.add_argument("input", nargs="?", help="JSON description")
    sc.add_argument("--type", help="builtin root datum label")
    sc.add_argument("--word", help="reduced word, comma-separated")
    sc.add_argument("--inequalities", help="JSON list of cone rows")
    sc.add_argument("--lambda", dest="lam", help="dominant weight, comma-separated")
    sc.add_argument("--I", help="parabolic indices, comma-separated")
    sc.add_argument("--w", help="Schubert word ('' for the identity)")
    sc.add_argument("--bound", type=int, default=None, help="harvest bound")
    sc.add_argument("--count", action="store_true", help="shorthand for the count action")
    sc.set_defaults(handler=_cmd_stringcone)

    demo = tree.add_parser("demo", parents=[common], help="built-in worked examples")
    demo.add_argument("which", choices=["g24", "a2-schubert"])
    demo.add_argument("--q", help="specialize the parameter to a rational")
    demo.add_argument("--bound", type=int, default=None)
    demo.add_argument("--cap", type=int, default=10)
    demo.add_argument("--w", help="Schubert word for a2-schubert")
    demo.add_argument("--I", help="parabolic indices for a2-schubert")
    demo.set_defaults(handler=_cmd_demo)
    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 0 if err.code == 0 else 2
    try:
        report = args.handler(args)
    except UsageFault as err:
        _emit({"error": str(err)}, args)
        return 2
    except CheckFault as err:
        report = dict(err.report)
        report.setdefault("error", str(err))
        _emit(report, args)
        return 1
    _emit(report, args)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
