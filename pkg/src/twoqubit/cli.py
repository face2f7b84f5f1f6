"""Command line front end: synth, verify, eval and examples."""

import argparse
import math
import os
import sys

import numpy as np

from .errors import FormatError, NotUnitary, SynthesisError
from .gates import count_gates, eval_circuit, phase_distance
from .kak import synth_kak, synth_sandwich
from .qr import synth_qr
from .textio import format_circuit, format_matrix, parse_circuit, parse_matrix

_BACKENDS = {"kak": synth_kak, "qr": synth_qr, "sandwich": synth_sandwich}


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_out(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_synth(args):
    target = parse_matrix(_read(args.matrix))
    synth = _BACKENDS[args.backend]
    circuit = synth(target, tol=args.tolerance, optimize=not args.no_simplify)
    _write_out(format_circuit(circuit), args.out)
    if args.report:
        counts = count_gates(circuit)
        err = phase_distance(eval_circuit(circuit), target)
        print(
            "backend=%s total=%d cnots=%d rotations=%d error=%.3e"
            % (args.backend, counts.total, counts.cnots, counts.rotations, err)
        )
    return 0


def _cmd_verify(args):
    target = parse_matrix(_read(args.matrix))
    circuit = parse_circuit(_read(args.circuit))
    d = phase_distance(eval_circuit(circuit), target)
    print("phase_distance=%.17g" % d)
    return 0 if d <= args.tolerance else 1


def _cmd_eval(args):
    circuit = parse_circuit(_read(args.circuit))
    _write_out(format_matrix(eval_circuit(circuit)), args.out)
    return 0


def _cmd_examples(args):
    h = math.sqrt(0.5) * np.array([[1.0, 1.0], [1.0, -1.0]])
    hxh = np.kron(h, h).astype(complex)
    uf = np.array(
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], dtype=complex
    )
    w = 1j
    qft = 0.5 * np.array(
        [
            [1, 1, 1, 1],
            [1, w, w**2, w**3],
            [1, w**2, w**4, w**6],
            [1, w**3, w**6, w**9],
        ],
        dtype=complex,
    )
    os.makedirs(args.directory, exist_ok=True)
    for name, m in (("hxh.mat", hxh), ("uf.mat", uf), ("qft.mat", qft)):
        path = os.path.join(args.directory, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(format_matrix(m))
        print(path)
    return 0


def _build_parser():
    p = argparse.ArgumentParser(
        prog="twoqubit",
        description="Decompose 4x4 unitaries into ry/rz/cnot circuits.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("synth", help="synthesize a circuit from a matrix file")
    s.add_argument("matrix", help="path to a matrix file")
    s.add_argument("--backend", choices=sorted(_BACKENDS), default="kak")
    s.add_argument("--tolerance", type=float, default=1e-9)
    s.add_argument("--no-simplify", action="store_true",
                   help="emit the raw template without gate merging")
    s.add_argument("--out", help="write the circuit here instead of stdout")
    s.add_argument("--report", action="store_true",
                   help="print gate counts and reconstruction error")
    s.set_defaults(func=_cmd_synth)

    v = sub.add_parser("verify", help="check a circuit file against a matrix file")
    v.add_argument("matrix")
    v.add_argument("circuit")
    v.add_argument("--tolerance", type=float, default=1e-9)
    v.set_defaults(func=_cmd_verify)

    e = sub.add_parser("eval", help="multiply out a circuit file")
    e.add_argument("circuit")
    e.add_argument("--out", help="write the matrix here instead of stdout")
    e.set_defaults(func=_cmd_eval)

    x = sub.add_parser("examples", help="write sample matrix files")
    x.add_argument("directory", nargs="?", default=".")
    x.set_defaults(func=_cmd_examples)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except NotUnitary as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except SynthesisError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
