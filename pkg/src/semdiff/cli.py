"""Command-line entry point.

Subcommands: fit, predict, experiment, binarize, convergence. Diagnostics go
to stderr, data to files; exit code 0 on success, 2 on any module error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import classifier, dataio, harness
from .errors import SemdiffError


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semdiff",
        description="Few-shot claim veracity classification from semantic-difference vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fit = sub.add_parser("fit", help="fit class representatives and write a model JSON")
    p_fit.add_argument("--data", required=True, help="seed-embeddings JSONL dataset")
    p_fit.add_argument("--out", required=True, help="output model JSON path")
    p_fit.add_argument("--shots", type=int, help="fit on an n-shot sample instead of the full set")
    p_fit.add_argument("--seed", type=int, default=123, help="sampling seed (default 123)")

    p_pred = sub.add_parser("predict", help="label a dataset with a fitted model")
    p_pred.add_argument("--model", required=True, help="model JSON path")
    p_pred.add_argument("--data", required=True, help="seed-embeddings JSONL dataset")
    p_pred.add_argument("--out", required=True, help="output CSV path")

    p_exp = sub.add_parser(
        "experiment",
        help="n-shot sweep over shot counts and seeds, aggregated to mean/std CSV",
    )
    p_exp.add_argument("--data", required=True, help="seed-embeddings JSONL dataset")
    p_exp.add_argument(
        "--shots",
        type=_csv_ints,
        default=harness.DEFAULT_SHOT_COUNTS,
        help="comma-separated shot counts (default 2,4,6,8,10,20,30,40,50,100)",
    )
    p_exp.add_argument(
        "--seeds",
        type=_csv_ints,
        default=harness.DEFAULT_SEEDS,
        help="comma-separated seeds (default 123..132)",
    )
    p_exp.add_argument("--out", required=True, help="output results CSV path")
    p_exp.add_argument(
        "--binary-seed",
        type=int,
        help="collapse Contradict/Neutral into Not_Support with this seed before the sweep",
    )

    p_bin = sub.add_parser(
        "binarize", help="write the two-class Support/Not_Support variant of a dataset"
    )
    p_bin.add_argument("--data", required=True, help="three-way seed-embeddings JSONL dataset")
    p_bin.add_argument("--out", required=True, help="output JSONL path")
    p_bin.add_argument("--seed", type=int, default=123, help="sampling seed (default 123)")
    p_bin.add_argument(
        "--cap", type=int, default=dataio.BINARY_CAP, help="per-class size cap (default 3333)"
    )

    p_conv = sub.add_parser(
        "convergence", help="per-class representative drift as shots accumulate"
    )
    p_conv.add_argument("--data", required=True, help="seed-embeddings JSONL dataset")
    p_conv.add_argument("--max-n", type=int, required=True, help="largest shot count")
    p_conv.add_argument("--seed", type=int, default=123, help="shuffle seed (default 123)")
    p_conv.add_argument("--out", required=True, help="output CSV path")
    return parser


def cmd_fit(args) -> int:
    dataset = dataio.load_embedded_dataset(args.data)
    if args.shots is not None:
        dataset, _ = harness.sample_shots(dataset, args.shots, args.seed)
    model = classifier.fit((p.label, p.diff()) for p in dataset.pairs)
    dataio.save_model(model, args.out)
    for rep in model.representatives:
        print(f"{rep.label}\t{rep.count}")
    return 0


def cmd_predict(args) -> int:
    model = dataio.load_model(args.model)
    dataset = dataio.load_embedded_dataset(args.data)
    results = classifier.predict_batch(model, dataset.pairs)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "gold", "pred", *model.labels])
        for pair, (pred, dists) in zip(dataset.pairs, results):
            writer.writerow(
                [pair.id, pair.label, pred, *(f"{dists[lab]!r}" for lab in model.labels)]
            )
    return 0


def cmd_experiment(args) -> int:
    dataset = dataio.load_embedded_dataset(args.data)
    setting = f"{len(dataset.labels)}way"
    if args.binary_seed is not None:
        dataset = dataio.make_binary_fever(dataset, args.binary_seed)
        setting = "binary"
    config = harness.ExperimentConfig(shot_counts=args.shots, seeds=args.seeds)
    results = harness.run_nshot_experiment(config, dataset)
    harness.emit_report(results, args.out, dataset_name=Path(args.data).stem, setting=setting)
    return 0


def cmd_binarize(args) -> int:
    dataset = dataio.load_embedded_dataset(args.data)
    binary = dataio.make_binary_fever(dataset, args.seed, cap=args.cap)
    dataio.save_embedded_dataset(binary, args.out)
    counts = {lab: len(group) for lab, group in binary.by_label().items()}
    print("\t".join(f"{lab}={n}" for lab, n in sorted(counts.items())))
    return 0


def cmd_convergence(args) -> int:
    dataset = dataio.load_embedded_dataset(args.data)
    curve = harness.convergence_curve(dataset, args.max_n, args.seed)
    harness.emit_convergence(curve, args.out)
    return 0


_HANDLERS = {
    "fit": cmd_fit,
    "predict": cmd_predict,
    "experiment": cmd_experiment,
    "binarize": cmd_binarize,
    "convergence": cmd_convergence,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (SemdiffError, OSError, ValueError) as exc:
        print(f"semdiff {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
