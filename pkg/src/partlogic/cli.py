"""Command-line front end.

Every command reads JSON (a file path, or ``-`` for stdin) and writes JSON to
stdout, or a plain table with ``--table``. Exit codes: 0 success, 2 input
error, 3 numeric-policy violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter

from . import codec
from .errors import PartitionLogicError
from .logical import (
    classical_luders,
    density_of_subset,
    entropy_report,
    logical_entropy_density,
    zeroed_amplitude_sum,
)
from .partitions import dit_count, from_attribute, is_complete, join_all
from .policy import DEFAULT_POLICY, NumericPolicy
from .quantum import (
    Hamiltonian,
    born_probabilities,
    decohered_coherence_sum,
    density_of_state,
    eigenspace_probabilities,
    inner_product,
    is_definite,
    make_state,
    measure_sample,
    measure_samples,
    quantum_logical_entropy,
    quantum_luders,
    unitary_evolve,
    von_neumann_entropy,
)
from .scenarios import feynman_report, scenario_double_slit, scenario_mach_zehnder
from .verify import verify_theorem1, verify_theorem2

EXIT_INPUT = 2
EXIT_NUMERIC = 3


class NumericViolation(Exception):
    """A checked identity missed its tolerance; indicates an implementation bug."""


def _load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise PartitionLogicError(f"{path}: malformed JSON ({exc})") from None
    except OSError as exc:
        raise PartitionLogicError(f"{path}: {exc.strerror}") from None


def _policy(args) -> NumericPolicy:
    if args.tolerance is None:
        return DEFAULT_POLICY
    return DEFAULT_POLICY.with_entry_tol(args.tolerance)


def _check(residual: float, policy: NumericPolicy, what: str) -> None:
    if not residual < policy.entry_tol:
        raise NumericViolation(f"{what} residual {residual:.3e} exceeds tolerance {policy.entry_tol:.1e}")


def _state(doc, policy):
    psi = codec.state_from_json(doc)
    return make_state(psi.amplitudes, psi.basis_labels, normalize=False, policy=policy)


def _partition_from_doc(doc, universe):
    if "partition" in doc:
        return codec.partition_from_json(doc["partition"], universe)
    if "attribute" in doc:
        return from_attribute(codec.attribute_from_json(doc["attribute"], universe))
    raise PartitionLogicError("input needs a 'partition' or an 'attribute'")


def cmd_entropy(args, policy):
    doc = _load(args.input)
    if not isinstance(doc, dict):
        raise PartitionLogicError("input must be a JSON object")
    if "density" in doc or "state" in doc:
        if "density" in doc:
            rho = codec.density_from_json(doc["density"], policy)
        else:
            rho = density_of_state(_state(doc["state"], policy), policy)
        diag = [p for p in rho.diagonal() if p > 0]
        return {
            "logical": logical_entropy_density(rho),
            "shannon": -sum(p * math.log2(p) for p in diag),
            "von_neumann": von_neumann_entropy(rho, policy),
        }
    universe = codec.universe_from_json(doc.get("universe"))
    partition = _partition_from_doc(doc, universe)
    out = entropy_report(partition)
    out["dits"] = dit_count(partition)
    return out


def cmd_measure(args, policy):
    psi = _state(_load(args.state), policy)
    obs = codec.observable_from_json(_load(args.observable))
    rho = density_of_state(psi, policy)
    rho_hat = quantum_luders(rho, obs, policy)
    h_hat = quantum_logical_entropy(rho_hat)
    residual = abs(decohered_coherence_sum(rho, rho_hat, policy) - h_hat)
    definite = is_definite(psi, obs, policy)
    out = {
        "born": dict(zip(psi.basis_labels, born_probabilities(psi).tolist())),
        "outcomes": [{"eigenvalue": lam, "probability": q} for lam, q in eigenspace_probabilities(psi, obs, policy)],
        "post_measurement_density": codec.density_to_json(rho_hat),
        "logical_entropy_after": h_hat,
        "theorem2_residual": residual,
        "definite": definite is not None,
        "definite_value": definite,
    }
    if args.samples:
        draws = measure_samples(psi, obs, args.samples, args.seed, policy)
        counts = Counter(draws)
        out["samples"] = {
            "n": args.samples,
            "seed": args.seed,
            "frequencies": [
                {"eigenvalue": lam, "count": counts.get(float(lam), 0), "frequency": counts.get(float(lam), 0) / args.samples}
                for lam, _ in eigenspace_probabilities(psi, obs, policy)
            ],
            # the first draw as a full record, post-measurement state included
            "first": codec.measurement_to_json(measure_sample(psi, obs, args.seed, policy)),
        }
    _check(residual, policy, "decohered-coherence")
    return out


def cmd_luders(args, policy):
    doc = _load(args.input)
    if not isinstance(doc, dict):
        raise PartitionLogicError("input must be a JSON object")
    if "state" in doc:
        rho = density_of_state(_state(doc["state"], policy), policy)
        rho_hat = quantum_luders(rho, codec.observable_from_json(doc.get("observable")), policy)
    else:
        if "density" in doc:
            rho = codec.density_from_json(doc["density"], policy)
            universe = codec.universe_from_json(doc.get("universe") or {"labels": list(rho.basis_labels)})
        else:
            universe = codec.universe_from_json(doc.get("universe"))
            rho = density_of_subset(universe, codec.subset_from_json(doc.get("subset")), policy)
        rho_hat = classical_luders(rho, _partition_from_doc(doc, universe), policy)
    zeroed = zeroed_amplitude_sum(rho, rho_hat, policy)
    h_hat = logical_entropy_density(rho_hat)
    out = {
        "before": codec.density_to_json(rho),
        "after": codec.density_to_json(rho_hat),
        "logical_before": logical_entropy_density(rho),
        "logical_after": h_hat,
        "zeroed_sum": zeroed,
    }
    if rho.is_pure():
        out["theorem_residual"] = abs(zeroed - h_hat)
        _check(out["theorem_residual"], policy, "zeroed-amplitude")
    return out


def cmd_join(args, policy):
    doc = _load(args.input)
    universe = codec.universe_from_json(doc.get("universe") if isinstance(doc, dict) else None)
    parts_doc = doc.get("partitions")
    if not isinstance(parts_doc, list):
        raise PartitionLogicError("input needs a 'partitions' list")
    parts = [codec.partition_from_json(p, universe) for p in parts_doc]
    joined = join_all(parts)
    return {"join": codec.partition_to_json(joined), "complete": is_complete(parts), "dits": dit_count(joined)}


def cmd_evolve(args, policy):
    psi = _state(_load(args.state), policy)
    h = codec.observable_from_json(_load(args.hamiltonian), cls=Hamiltonian)
    out_state = unitary_evolve(psi, h, args.time)
    before = density_of_state(psi, policy)
    after = density_of_state(out_state, policy)
    residual = abs(inner_product(out_state, out_state) - inner_product(psi, psi))
    _check(residual, policy, "norm preservation")
    return {
        "state": codec.state_to_json(out_state),
        "time": args.time,
        "logical_before": quantum_logical_entropy(before),
        "logical_after": quantum_logical_entropy(after),
        "norm_residual": residual,
    }


def _report_checks(report, policy):
    for name, dist in report.distributions.items():
        if report.name != "feynman":
            _check(abs(sum(dist) - 1.0), DEFAULT_POLICY.with_entry_tol(1e-9), f"{name} normalization")
    trace = [e["logical"] for e in report.entropy_trace]
    for a, b in zip(trace, trace[1:]):
        if b < a - policy.entry_tol:
            raise NumericViolation("logical entropy decreased along the scenario")
    return report.to_dict()


def cmd_scenario(args, policy):
    if args.scenario == "mach-zehnder":
        report = scenario_mach_zehnder(args.phase, args.which_path, policy)
    elif args.scenario == "double-slit":
        report = scenario_double_slit(args.which_slit, args.bins, tuple(args.phases), policy=policy)
    else:
        try:
            amps = [complex(a.replace(" ", "")) for a in args.amplitudes]
        except ValueError as exc:
            raise PartitionLogicError(f"bad amplitude: {exc}") from None
        report = feynman_report(amps, policy)
        report.parameters["distinguishable"] = args.distinguishable
        dist, indist = report.distributions["probability"]
        report.parameters["probability"] = dist if args.distinguishable else indist
    return _report_checks(report, policy)


def cmd_verify(args, policy):
    run = verify_theorem1 if args.theorem == "theorem1" else verify_theorem2
    result = run(args.trials, args.seed, args.dim, policy).to_dict()
    if not result["passed"]:
        print(json.dumps(result, indent=2), file=sys.stdout)
        raise NumericViolation(f"{result['failures']} of {args.trials} trials exceeded tolerance")
    return result


def _flatten(prefix: str, value, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, json.dumps(value)))


def render_table(result: dict) -> str:
    rows: list[tuple[str, str]] = []
    _flatten("", result, rows)
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def build_parser() -> argparse.ArgumentParser:
    # accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                        help="entry tolerance for checked identities")
    common.add_argument("--table", action="store_true", default=argparse.SUPPRESS,
                        help="print a key/value table instead of JSON")

    parser = argparse.ArgumentParser(prog="partlogic", description=__doc__.splitlines()[0], parents=[common])
    parser.set_defaults(tolerance=None, table=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", parents=[common], help="logical/Shannon/Von Neumann entropies")
    p.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin (default)")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("measure", parents=[common], help="projective measurement of a state by an observable")
    p.add_argument("state", help="state JSON file")
    p.add_argument("observable", help="observable JSON file")
    p.add_argument("--samples", type=int, default=0, help="number of simulated measurements")
    p.add_argument("--seed", type=int, default=0, help="SplitMix64 seed")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("luders", parents=[common], help="Lüders mixture of a subset, density or state")
    p.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin (default)")
    p.set_defaults(func=cmd_luders)

    p = sub.add_parser("join", parents=[common], help="join of partitions and completeness")
    p.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin (default)")
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("evolve", parents=[common], help="unitary evolution e^{iHt}")
    p.add_argument("state", help="state JSON file")
    p.add_argument("hamiltonian", help="Hamiltonian JSON file (observable schema)")
    p.add_argument("--time", type=float, required=True, help="evolution time t")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("scenario", parents=[common], help="canned interferometry scenarios")
    scen = p.add_subparsers(dest="scenario", required=True)
    s = scen.add_parser("mach-zehnder", parents=[common], help="two-arm interferometer")
    s.add_argument("--phase", type=float, default=0.0, help="phase shift on arm 2, radians")
    s.add_argument("--which-path", action="store_true", help="measure the arm between the splitters")
    s = scen.add_parser("double-slit", parents=[common], help="discretised two-slit screen")
    s.add_argument("--which-slit", action="store_true", help="measure the slit before the screen")
    s.add_argument("--bins", type=int, default=81, help="screen bins, at least 2")
    s.add_argument("--phases", type=float, nargs=2, default=[0.0, 0.0], help="extra phase per slit, radians")
    s = scen.add_parser("feynman", parents=[common], help="sum over alternative paths")
    s.add_argument("--amplitudes", nargs="+", required=True, help="complex numbers, e.g. 0.7071 -0.7071 0.5+0.5j")
    s.add_argument("--distinguishable", action="store_true", help="add probabilities instead of amplitudes")
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("verify", parents=[common], help="random-instance check of a theorem")
    p.add_argument("theorem", choices=["theorem1", "theorem2"])
    p.add_argument("--trials", type=int, default=1000, help="random instances")
    p.add_argument("--seed", type=int, default=0, help="SplitMix64 seed")
    p.add_argument("--dim", type=int, default=8, help="largest universe size / Hilbert dimension")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        policy = _policy(args)
        result = args.func(args, policy)
    except NumericViolation as exc:
        print(f"partlogic: numeric policy violation: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (PartitionLogicError, KeyError, TypeError, ValueError) as exc:
        print(f"partlogic: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.table:
        print(render_table(result))
    else:
        print(json.dumps(result, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
