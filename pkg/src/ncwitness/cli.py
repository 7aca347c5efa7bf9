"""Command-line entry point: ``ncwitness <command> [options]``.

Exit status is 0 on success, 1 on a computation or input-file error and 2 on
a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import states
from .circuit import detection_readout
from .decoherence import DEFAULT_CHANNEL, ChannelSpec, dynamics_sweep, sampling_schedule
from .discord import discord
from .qmat import density_from_json, density_to_json
from .tomography import TomographyRecord, measure_all, reconstruct
from .witness import C_OPT, OptimizationError, map_value_direct, optimize_c

BUILTIN_STATES = ("sigma", "bell", "mixed", "zero", "random")

STATE_HELP = (
    "built-in name (sigma, bell, mixed, zero, random) or path to a DensityMatrix JSON "
    'file {"dim": 4, "rows": 4, "cols": 4, "re": [...16], "im": [...16]}'
)


class InputError(Exception):
    pass


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def load_state(name, seed=0):
    if name == "sigma":
        return states.sigma_ncc()
    if name == "bell":
        return states.bell_state()
    if name == "mixed":
        return states.maximally_mixed(4)
    if name == "zero":
        return states.basis_state("00")
    if name == "random":
        return states.random_density(4, seed)
    try:
        return density_from_json(_read_json(name))
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from exc


def load_spec(path):
    if path is None:
        return DEFAULT_CHANNEL
    try:
        return ChannelSpec.from_json(_read_json(path))
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def parse_schedule(text, spec):
    if text in ("standard", "paper"):
        return sampling_schedule(spec.j_coupling)
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(f"bad schedule {text!r}: expected 'standard' or comma-separated seconds") from exc


def _emit_json(obj, out):
    text = json.dumps(obj, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _fmt(x):
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def cmd_state(args):
    _emit_json(density_to_json(load_state(args.state, args.seed)), args.out)


def cmd_witness(args):
    report = map_value_direct(load_state(args.state, args.seed), args.c)
    _emit_json(report.to_json(), args.out)


def cmd_readout(args):
    z1, z2, z2p = detection_readout(load_state(args.state, args.seed))
    _emit_json({"z1": z1, "z2": z2, "z2p": z2p}, args.out)


def cmd_discord(args):
    result = discord(load_state(args.state, args.seed), args.measured, args.grid)
    _emit_json(result.to_json(), args.out)


def cmd_dynamics(args):
    spec = load_spec(args.spec)
    schedule = parse_schedule(args.schedule, spec)
    points = dynamics_sweep(spec, schedule, c=args.c, measured=args.measured, grid=args.grid)
    fh = sys.stdout if args.out is None else open(args.out, "w", newline="")
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["time_s", "map_value", "discord_bits", "fidelity"])
        for p in points:
            writer.writerow([_fmt(p.time), _fmt(p.map_value), _fmt(p.discord), _fmt(p.fidelity_vs_ideal)])
    finally:
        if fh is not sys.stdout:
            fh.close()
    if args.states_dir:
        os.makedirs(args.states_dir, exist_ok=True)
        for i, p in enumerate(points):
            obj = density_to_json(p.state)
            obj["time_s"] = p.time
            with open(os.path.join(args.states_dir, f"state_{i:03d}.json"), "w") as fh:
                json.dump(obj, fh, indent=2)
                fh.write("\n")


def cmd_tomo_measure(args):
    record = measure_all(load_state(args.state, args.seed), args.noise, args.seed)
    _emit_json(record.to_json(), args.out)


def cmd_tomo_reconstruct(args):
    try:
        record = TomographyRecord.from_json(_read_json(args.record))
    except ValueError as exc:
        raise InputError(f"{args.record}: {exc}") from exc
    rho = reconstruct(record)
    obj = density_to_json(rho)
    obj["map_value"] = map_value_direct(rho, args.c).map_value
    _emit_json(obj, args.out)


def cmd_optimize_c(args):
    c, spec = optimize_c(seed=args.seed, starts_per_round=args.starts)
    _emit_json({
        "c_opt": c,
        "argmax": {
            "basis_a": {"re": spec.basis_a.real.tolist(), "im": spec.basis_a.imag.tolist()},
            "basis_b": {"re": spec.basis_b.real.tolist(), "im": spec.basis_b.imag.tolist()},
            "probs": spec.probs.tolist(),
        },
    }, args.out)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness (default 0)")
    common.add_argument("--out", help="output file (default: stdout)")

    state_arg = argparse.ArgumentParser(add_help=False)
    state_arg.add_argument("--state", default="sigma", help=STATE_HELP)

    c_arg = argparse.ArgumentParser(add_help=False)
    c_arg.add_argument("--c", type=float, default=C_OPT, help=f"witness constant (default {C_OPT})")

    disc_arg = argparse.ArgumentParser(add_help=False)
    disc_arg.add_argument("--measured", choices=("A", "B"), default="B",
                          help="qubit measured in the discord optimization (default B)")
    disc_arg.add_argument("--grid", type=int, default=61, help="coarse grid points per angle (default 61)")

    parser = argparse.ArgumentParser(
        prog="ncwitness",
        description="Nonclassicality witness, discord and decoherence simulation for two qubits.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("state", parents=[common, state_arg], help="emit a state as DensityMatrix JSON",
                       description="Write a built-in or file state as DensityMatrix JSON.")
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("witness", parents=[common, state_arg, c_arg], help="evaluate the witness map",
                       description="Evaluate the witness map; writes a WitnessReport JSON object.")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("readout", parents=[common, state_arg], help="detection-circuit polarizations",
                       description='Polarizations after CH and CNOT as {"z1", "z2", "z2p"} JSON.')
    p.set_defaults(func=cmd_readout)

    p = sub.add_parser("discord", parents=[common, state_arg, disc_arg], help="quantum discord",
                       description="Quantum discord in bits; writes DiscordResult JSON.")
    p.set_defaults(func=cmd_discord)

    p = sub.add_parser(
        "dynamics", parents=[common, c_arg, disc_arg], help="map value and discord under relaxation",
        description=(
            "Evolve the NCC state under T1/T2 relaxation and write CSV with header "
            "time_s,map_value,discord_bits,fidelity (6 decimals). The channel spec JSON has keys "
            "t1_q1, t2_q1, t1_q2, t2_q2 (s), j_coupling (Hz), include_j (bool)."
        ),
    )
    p.add_argument("--spec", help="ChannelSpec JSON file (default: built-in placeholder values)")
    p.add_argument("--schedule", default="standard",
                   help="'standard' (alias 'paper') for times 2n/J with n in 0,1,3,...,15,20,...,50, "
                        "or comma-separated times in seconds")
    p.add_argument("--states-dir", help="also write one DensityMatrix JSON per time point here")
    p.set_defaults(func=cmd_dynamics)

    p = sub.add_parser(
        "tomo-measure", parents=[common, state_arg], help="simulate Pauli tomography",
        description='Write a TomographyRecord JSON {"labels", "values", "noise_sigma", "seed"}.',
    )
    p.add_argument("--noise", type=float, default=0.0, help="Gaussian noise std per expectation")
    p.set_defaults(func=cmd_tomo_measure)

    p = sub.add_parser(
        "tomo-reconstruct", parents=[common, c_arg], help="reconstruct a state from a record",
        description="Linear inversion plus physical projection; DensityMatrix JSON with a map_value key.",
    )
    p.add_argument("--record", required=True, help="TomographyRecord JSON file")
    p.set_defaults(func=cmd_tomo_reconstruct)

    p = sub.add_parser("optimize-c", parents=[common], help="re-derive the witness constant",
                       description="Maximize the product term over PCC states; JSON with c_opt and argmax.")
    p.add_argument("--starts", type=int, default=64, help="random starts per round (default 64)")
    p.set_defaults(func=cmd_optimize_c)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (InputError, OptimizationError, ValueError) as exc:
        print(f"ncwitness {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
