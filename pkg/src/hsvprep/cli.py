"""Batch command-line front end.

Usage:
    hsvprep --input image.png --test-max 6.5 --out-dir out/
    hsvprep --manifest batch.csv --out-dir out/ --jobs 4

The manifest is a UTF-8 CSV with header `path,test_max`; paths resolve
relative to the manifest's directory. Every image produces
`<stem>_noletters.png` and `<stem>_adapted.png` in the output directory.
One failing image is reported and skipped, not fatal. Exit codes: 0 all
images succeeded, 1 at least one failed, 2 usage or manifest error.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from .imageio import load_image, save_image
from .preprocess import VELOCITY_FLOOR, PipelineConfig, process_image

# the k slider is deliberately narrower than what the library accepts
K_MIN, K_MAX = 5, 40


class ManifestError(ValueError):
    """The batch manifest is missing, malformed, or inconsistent."""


@dataclass(frozen=True)
class ManifestEntry:
    input_path: Path
    test_max: float


@dataclass(frozen=True)
class InputSpec:
    """Where the images come from and where the outputs go."""

    input_path: Path | None
    manifest_path: Path | None
    out_dir: Path
    jobs: int
    quiet: bool


@dataclass(frozen=True)
class EntryResult:
    input_path: Path
    status: str  # "ok" | "error"
    message: str = ""
    dark_pixels: int = 0
    letter_pixels: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class RunReport:
    entries: list[EntryResult]

    @property
    def failed(self) -> int:
        return sum(1 for e in self.entries if e.status != "ok")


def parse_args(argv: list[str]) -> tuple[PipelineConfig, InputSpec]:
    parser = argparse.ArgumentParser(
        prog="hsvprep",
        description="Fill dark artifacts, remove annotation letters, and adapt "
        "the velocity color scale of HSV-colormapped images.",
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", type=Path, metavar="PATH", help="process a single PNG")
    source.add_argument(
        "--manifest", type=Path, metavar="PATH", help="CSV manifest with header path,test_max"
    )
    parser.add_argument("--out-dir", type=Path, default=Path("."), metavar="PATH")
    parser.add_argument(
        "--test-max",
        type=float,
        metavar="FLOAT",
        help="scale maximum of the input image in m/s (required with --input)",
    )
    parser.add_argument("--ref-max", type=float, default=10.0, metavar="FLOAT")
    parser.add_argument("--k", type=int, default=10, metavar="INT")
    parser.add_argument("--dark-threshold", type=float, default=0.148, metavar="FLOAT")
    parser.add_argument("--sat-min", type=float, default=0.700, metavar="FLOAT")
    parser.add_argument("--radius", type=int, default=6, metavar="INT")
    parser.add_argument("--noise-cutoff", type=float, default=0.80, metavar="FLOAT")
    parser.add_argument("--jobs", type=int, default=1, metavar="INT")
    parser.add_argument("--quiet", action="store_true", help="suppress per-image report lines")
    args = parser.parse_args(argv)

    if not K_MIN <= args.k <= K_MAX:
        parser.error(f"k must be in [{K_MIN}, {K_MAX}]")
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.input is not None and args.test_max is None:
        parser.error("--test-max is required with --input")
    if args.manifest is not None and args.test_max is not None:
        parser.error("--test-max applies to --input runs; the manifest carries per-image maxima")

    try:
        cfg = PipelineConfig(
            test_max=args.test_max,
            ref_max=args.ref_max,
            dark_threshold=args.dark_threshold,
            sat_min=args.sat_min,
            dilation_radius=args.radius,
            k=args.k,
            noise_cutoff=args.noise_cutoff,
        )
    except ValueError as exc:
        parser.error(str(exc))
    if args.test_max is not None and not VELOCITY_FLOOR < args.test_max <= args.ref_max:
        parser.error(f"--test-max must be in ({VELOCITY_FLOOR}, {args.ref_max}]")

    spec = InputSpec(args.input, args.manifest, args.out_dir, args.jobs, args.quiet)
    return cfg, spec


def load_manifest(path: str | Path, ref_max: float = 10.0) -> list[ManifestEntry]:
    """Parse a CSV batch manifest into entries with validated scale maxima."""
    path = Path(path)
    base = path.resolve().parent
    entries: list[ManifestEntry] = []
    saw_header = False
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if not saw_header:
                if [cell.strip() for cell in row] != ["path", "test_max"]:
                    raise ManifestError(f"{path}:{lineno}: expected header 'path,test_max'")
                saw_header = True
                continue
            if len(row) != 2:
                raise ManifestError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
            name = row[0].strip()
            if not name:
                raise ManifestError(f"{path}:{lineno}: empty image path")
            try:
                test_max = float(row[1])
            except ValueError:
                raise ManifestError(
                    f"{path}:{lineno}: test_max is not a number: {row[1].strip()!r}"
                ) from None
            if not VELOCITY_FLOOR < test_max <= ref_max:
                raise ManifestError(
                    f"{path}:{lineno}: test_max {test_max} for {name!r} is outside "
                    f"({VELOCITY_FLOOR}, {ref_max}]"
                )
            entries.append(ManifestEntry(base / name, test_max))
    if not entries:
        raise ManifestError(f"{path}: manifest has no rows")
    return entries


def _process_entry(entry: ManifestEntry, cfg: PipelineConfig, out_dir: Path) -> EntryResult:
    started = time.perf_counter()
    try:
        img = load_image(entry.input_path)
        result = process_image(img, replace(cfg, test_max=entry.test_max))
        stem = Path(entry.input_path).stem
        save_image(result.letters_removed, out_dir / f"{stem}_noletters.png")
        save_image(result.adapted, out_dir / f"{stem}_adapted.png")
    except Exception as exc:  # one bad image must not kill the batch
        return EntryResult(
            entry.input_path, "error", message=str(exc), seconds=time.perf_counter() - started
        )
    return EntryResult(
        entry.input_path,
        "ok",
        dark_pixels=result.dark_pixels,
        letter_pixels=result.letter_pixels,
        seconds=time.perf_counter() - started,
    )


def _entry_line(res: EntryResult) -> str:
    if res.status == "ok":
        return (
            f"status=ok path={res.input_path} dark={res.dark_pixels} "
            f"letters={res.letter_pixels} secs={res.seconds:.3f}"
        )
    return f'status=error path={res.input_path} message="{res.message}"'


def run_batch(
    entries: list[ManifestEntry],
    cfg: PipelineConfig,
    out_dir: str | Path,
    jobs: int = 1,
    quiet: bool = False,
    stream=None,
) -> RunReport:
    """Process entries in manifest order, writing two PNGs per image.

    With jobs > 1, images are processed by a thread pool; report lines and
    the returned entries still follow manifest order, and the output bytes
    are identical to a single-worker run.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stream = sys.stdout if stream is None else stream

    results: list[EntryResult] = []

    def emit(result: EntryResult) -> None:
        results.append(result)
        if not quiet:
            print(_entry_line(result), file=stream)

    if jobs == 1:
        for entry in entries:
            emit(_process_entry(entry, cfg, out_dir))
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(lambda e: _process_entry(e, cfg, out_dir), entries):
                emit(result)
    return RunReport(results)


def main(argv: list[str] | None = None) -> int:
    cfg, spec = parse_args(sys.argv[1:] if argv is None else argv)

    if spec.manifest_path is not None:
        try:
            entries = load_manifest(spec.manifest_path, cfg.ref_max)
        except (ManifestError, OSError) as exc:
            print(f"hsvprep: error: {exc}", file=sys.stderr)
            return 2
    else:
        assert spec.input_path is not None and cfg.test_max is not None
        entries = [ManifestEntry(spec.input_path, cfg.test_max)]

    report = run_batch(entries, cfg, spec.out_dir, jobs=spec.jobs, quiet=spec.quiet)
    ok = len(report.entries) - report.failed
    print(f"total={len(report.entries)} ok={ok} failed={report.failed}")
    return 0 if report.failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
