"""Command-line front end.

Single-shot commands print a JSON envelope::

    {"command": ..., "inputs": {...}, "results": {...}, "references": [...]}

Sweeps print CSV. Every float is written in lowercase scientific notation with
12 significant digits so output is byte-stable.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 conservation violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Sequence

from . import annihilation, photon, stern_gerlach
from .constants import CODATA_2018, flux_quantum, joule_to_kev, kev_to_joule, mu_bohr, omega_from_energy
from .errors import DomainError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_NOT_CONSERVED = 4

ENTANGLED_NAMES = ("psi_i", "psi_f")
STATE_NAMES = annihilation.PRODUCT_STATE_NAMES + ENTANGLED_NAMES

SWEEP_HEADER = ("omega_rad_per_s", "separation_m")

# relations backing each command's results
REF_FLUX = "Phi_0 = h/e"
REF_MU_B = "mu_B = e*hbar/(2*m0)"
REF_SZ = "<sum S_z> = <(S1)_z + (S2)_z>"
REF_MU = "<sum mu_z>, mu(e-) = -g*mu_B*S, mu(e+) = +g*mu_B*S, g = 2"
REF_TRANSITION = "(|dd> +/- |uu>)/sqrt(2) -> (|du> +/- |ud>)/sqrt(2)"
REF_PHOTON_MU = "mu_z = +/- e*c^2/omega"
REF_ENERGY = "E = m0*c^2 = hbar*omega"
REF_SPIN_ZERO = "photon spin_z = <sum S_z> on |du> or |ud> = 0"
REF_FORCE = "F = mu_z * dBz/dz"
REF_SGE_MODEL = "m_eff = hbar*omega/c^2, y = F/(hbar*omega) * (L^2/2 + L*D)"


def fmt(x: float) -> str:
    if x == 0:
        x = 0.0  # drop the sign of negative zero
    return f"{x:.11e}"


def _encode(value: Any, indent: int) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot serialize non-finite value {value!r}")
        return fmt(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(key))}: {_encode(v, indent + 1)}" for key, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}{_encode(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def envelope(command: str, inputs: dict, results: dict, references: Sequence[str]) -> str:
    """Serialize an output envelope deterministically (insertion key order)."""
    doc = {"command": command, "inputs": inputs, "results": results, "references": list(references)}
    return _encode(doc, 0) + "\n"


def csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return value


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite, got {text!r}")
    return value


def _beam(text: str) -> list[photon.Helicity]:
    try:
        return [photon.Helicity(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"beam must be a comma list of rh/lh, got {text!r}") from None


def cmd_constants(args) -> tuple[str, int]:
    k = CODATA_2018
    results = {
        "e_C": k.e,
        "h_J_s": k.h,
        "hbar_J_s": k.hbar,
        "m0_kg": k.m0,
        "c_m_per_s": k.c,
        "mu_B_J_per_T": mu_bohr(k),
        "Phi_0_T_m2": flux_quantum(k),
    }
    return envelope("constants", {"source": "CODATA 2018"}, results, [REF_MU_B, REF_FLUX]), EXIT_OK


def cmd_expectations(args) -> tuple[str, int]:
    k = CODATA_2018
    if args.state == "psi_i":
        state = annihilation.build_pair("initial", args.sign).state
    elif args.state == "psi_f":
        state = annihilation.build_pair("final", args.sign).state
    else:
        state = annihilation.named_state(args.state)
    inputs = {"state": args.state}
    if args.state in ENTANGLED_NAMES:
        inputs["sign"] = args.sign
    mu = annihilation.moment_expectation(state, k)
    results = {
        "sz_hbar": annihilation.spin_expectation(state),
        "mu_z_J_per_T": mu,
        "mu_over_mu_B": mu / mu_bohr(k),
    }
    return envelope("expectations", inputs, results, [REF_SZ, REF_MU]), EXIT_OK


def cmd_annihilate(args) -> tuple[str, int]:
    report = annihilation.annihilate(args.sign_initial, args.sign_final, CODATA_2018, args.tolerance)
    inputs = {"sign_initial": args.sign_initial, "sign_final": args.sign_final, "tolerance": args.tolerance}
    results = {
        "sz_initial_hbar": report.sz_initial,
        "sz_final_hbar": report.sz_final,
        "mu_initial_J_per_T": report.mu_initial,
        "mu_final_J_per_T": report.mu_final,
        "moment_scale_J_per_T": report.moment_scale,
        "spin_conserved_flag": report.spin_conserved,
        "moment_conserved_flag": report.moment_conserved,
    }
    code = EXIT_OK if report.spin_conserved and report.moment_conserved else EXIT_NOT_CONSERVED
    return envelope("annihilate", inputs, results, [REF_TRANSITION, REF_SZ, REF_MU]), code


def _omega_from_args(args) -> tuple[float, dict]:
    if args.omega is not None:
        return args.omega, {"omega_rad_per_s": args.omega}
    if args.energy_kev is not None:
        return omega_from_energy(kev_to_joule(args.energy_kev, CODATA_2018), CODATA_2018), {
            "energy_keV": args.energy_kev
        }
    return None, {}


def cmd_photon(args) -> tuple[str, int]:
    k = CODATA_2018
    omega, inputs = _omega_from_args(args)
    inputs["helicity"] = args.helicity
    p = photon.Photon(omega, args.helicity)
    mu = photon.magnetic_moment(p, k)
    flux = photon.quantum_flux(p, k)
    energy = p.energy(k)
    results = {
        "omega_rad_per_s": p.omega,
        "energy_J": energy,
        "energy_keV": joule_to_kev(energy, k),
        "wavelength_m": p.wavelength(k),
        "mu_z_J_per_T": mu,
        "mu_over_mu_B": mu / mu_bohr(k),
        "flux_T_m2": flux,
        "flux_over_Phi_0": flux / flux_quantum(k),
        "spin_z_hbar": photon.spin_z(p),
    }
    return envelope("photon", inputs, results, [REF_ENERGY, REF_PHOTON_MU, REF_FLUX, REF_SPIN_ZERO]), EXIT_OK


def cmd_sge(args) -> tuple[str, int]:
    k = CODATA_2018
    cfg = stern_gerlach.SGEConfig(args.gradient, args.length, args.drift)
    inputs = {"gradient_T_per_m": args.gradient, "magnet_length_m": args.length, "drift_length_m": args.drift}
    refs = [REF_FORCE, REF_PHOTON_MU, REF_SGE_MODEL]

    if args.sweep is not None:
        lo, hi = args.sweep
        rows = stern_gerlach.sweep_omega(lo, hi, args.steps, not args.single_helicity, cfg, k)
        if args.output == "json":
            inputs.update(
                {"omega_min_rad_per_s": lo, "omega_max_rad_per_s": hi, "steps": args.steps,
                 "helicity_pair": not args.single_helicity}
            )
            results = {"rows": [{SWEEP_HEADER[0]: w, SWEEP_HEADER[1]: s} for w, s in rows]}
            return envelope("sge", inputs, results, refs), EXIT_OK
        return csv_text(SWEEP_HEADER, rows), EXIT_OK

    omega, omega_inputs = _omega_from_args(args)
    if omega is None:
        omega = photon.annihilation_photon(photon.Helicity.RH, k).omega
        omega_inputs = {"omega_rad_per_s": omega}
    inputs.update(omega_inputs)
    inputs["beam"] = ",".join(h.value for h in args.beam)
    beam = [photon.Photon(omega, h) for h in args.beam]
    result = stern_gerlach.simulate_beam(beam, cfg, k)

    if args.output == "csv":
        header = ("helicity", "omega_rad_per_s", "force_N", "transverse_kick_kg_m_per_s", "displacement_m")
        rows = [(d.photon.helicity.value, d.photon.omega, d.force, d.transverse_kick, d.displacement)
                for d in result.deflections]
        return csv_text(header, rows), EXIT_OK

    results = {
        "omega_rad_per_s": omega,
        "deflections": [
            {
                "helicity": d.photon.helicity.value,
                "force_N": d.force,
                "transverse_kick_kg_m_per_s": d.transverse_kick,
                "displacement_m": d.displacement,
            }
            for d in result.deflections
        ],
        "separation_m": result.separation,
    }
    return envelope("sge", inputs, results, refs), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammaspin",
        description="Spin and magnetic-moment expectation values for e-/e+ annihilation photons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="CODATA constants with mu_B and Phi_0")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("expectations", help="<sum S_z> and <sum mu_z> for a named state")
    p.add_argument("--state", required=True, choices=STATE_NAMES)
    p.add_argument("--sign", choices=("plus", "minus"), default="plus",
                   help="relative sign for psi_i / psi_f (default: plus)")
    p.set_defaults(func=cmd_expectations)

    p = sub.add_parser("annihilate", help="conservation audit of the annihilation transition")
    p.add_argument("--sign-initial", choices=("plus", "minus"), default="plus")
    p.add_argument("--sign-final", choices=("plus", "minus"), default="plus")
    p.add_argument("--tolerance", type=_positive_float, default=annihilation.DEFAULT_TOLERANCE)
    p.set_defaults(func=cmd_annihilate)

    p = sub.add_parser("photon", help="magnetic moment, flux and spin of one photon")
    freq = p.add_mutually_exclusive_group(required=True)
    freq.add_argument("--omega", type=float, help="angular frequency (rad/s)")
    freq.add_argument("--energy-kev", type=float, help="photon energy (keV)")
    p.add_argument("--helicity", choices=("rh", "lh"), default="rh")
    p.set_defaults(func=cmd_photon)

    p = sub.add_parser("sge", help="Stern-Gerlach deflection of a photon beam")
    p.add_argument("--gradient", type=_finite_float, required=True, help="dBz/dz (T/m)")
    p.add_argument("--length", type=_positive_float, required=True, help="magnet length (m)")
    p.add_argument("--drift", type=float, default=0.0, help="drift length to detector (m)")
    freq = p.add_mutually_exclusive_group()
    freq.add_argument("--omega", type=float, help="angular frequency (rad/s); default: annihilation photon")
    freq.add_argument("--energy-kev", type=float, help="photon energy (keV)")
    freq.add_argument("--sweep", type=float, nargs=2, metavar=("OMEGA_MIN", "OMEGA_MAX"),
                      help="log-spaced omega sweep (rad/s)")
    p.add_argument("--steps", type=int, default=10, help="sweep sample count (default: 10)")
    p.add_argument("--single-helicity", action="store_true",
                   help="sweep an rh-only beam and report distance from the axis")
    p.add_argument("--beam", type=_beam, default=[photon.Helicity.RH, photon.Helicity.LH],
                   help="comma list of helicities for single-omega mode (default: rh,lh)")
    p.add_argument("--output", choices=("json", "csv"), default=None,
                   help="default: json for single omega, csv for sweeps")
    p.set_defaults(func=cmd_sge)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sge" and args.output is None:
        args.output = "csv" if args.sweep is not None else "json"
    try:
        text, code = args.func(args)
    except DomainError as exc:
        if args.command == "sge":
            parser.error(str(exc))  # geometry and range problems are usage errors
        print(f"gammaspin: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
