#!/usr/bin/env python3
"""Fetch the RAND-MIPT terrorism severity data and normalize it for tailrisk.

The severity file is not redistributed with this repository. This script
downloads it from the maintainer's page (or reads a file you downloaded
yourself), keeps the deadly events (severity >= 1), tags the single
2749-death record so the default exclusion can find it, and writes the
two-column catalog the CLI and the acceptance harness expect:

    data/rand_mipt.tsv

Provenance (URL, retrieval date, sha256 of the raw bytes, row counts) is
recorded in `#` comment lines at the top of the output; the catalog
loader carries those into every report's `source` field.

Usage:
    python3 scripts/fetch_rand_mipt.py
    python3 scripts/fetch_rand_mipt.py --input ~/Downloads/severities.txt
    python3 scripts/fetch_rand_mipt.py --url http://.../file.txt --out data/rand_mipt.tsv
"""

import argparse
import datetime
import hashlib
import re
import sys
import urllib.request
from pathlib import Path

DEFAULT_PAGE = "http://tuvalu.santafe.edu/~aaronc/rareevents/"
# the severity list as hosted on the page above
DEFAULT_URL = DEFAULT_PAGE + "data.txt"

EXPECTED_DEADLY = 13275  # includes the 2749-death record
LANDMARK = 2749          # the event excluded by default in every analysis


def download(url: str) -> bytes:
    sys.stderr.write(f"fetching {url}\n")
    with urllib.request.urlopen(url, timeout=60) as resp:
        return resp.read()


def parse_severities(raw: bytes) -> list[int]:
    """First integer field of every data line; blank/comment lines skipped."""
    severities = []
    for line in raw.decode("utf-8", errors="replace").splitlines():
        line = line.strip()
        if not line or line.startswith(("#", "%", "//")):
            continue
        m = re.match(r"[-+]?\d+", line.split(",")[0].split()[0])
        if not m:
            continue
        severities.append(int(m.group(0)))
    return severities


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--url", default=DEFAULT_URL,
                    help=f"severity file URL (default: {DEFAULT_URL})")
    ap.add_argument("--input", type=Path, default=None,
                    help="use an already-downloaded raw file instead of fetching")
    ap.add_argument("--out", type=Path, default=Path("data/rand_mipt.tsv"),
                    help="output catalog path (default: data/rand_mipt.tsv)")
    ap.add_argument("--force", action="store_true",
                    help="write the catalog even if validation fails")
    args = ap.parse_args()

    if args.input is not None:
        raw = args.input.read_bytes()
        origin = str(args.input)
    else:
        try:
            raw = download(args.url)
        except Exception as exc:  # URLError, timeout, HTTP errors
            sys.stderr.write(
                f"error: could not fetch {args.url}: {exc}\n"
                f"Download the severity file manually from {DEFAULT_PAGE}\n"
                "and re-run with --input <path-to-file>.\n")
            return 1
        origin = args.url

    digest = hashlib.sha256(raw).hexdigest()
    severities = parse_severities(raw)
    deadly = [s for s in severities if s >= 1]

    problems = []
    if len(deadly) != EXPECTED_DEADLY:
        problems.append(
            f"expected {EXPECTED_DEADLY} deadly events, found {len(deadly)} "
            f"({len(severities)} rows before the >=1 filter)")
    n_landmark = deadly.count(LANDMARK)
    if n_landmark != 1:
        problems.append(f"expected exactly one {LANDMARK}-death record, found {n_landmark}")

    if problems and not args.force:
        for p in problems:
            sys.stderr.write(f"error: {p}\n")
        sys.stderr.write(
            "The hosted file may have been revised; inspect it and re-run with "
            "--force to write the catalog anyway (published tail counts will "
            "likely not reproduce).\n")
        return 1
    for p in problems:
        sys.stderr.write(f"warning (--force): {p}\n")

    today = datetime.date.today().isoformat()
    lines = [
        "# RAND-MIPT terrorism event severities (deaths per event, 1968-2007)",
        f"# source: {origin}",
        f"# fetched: {today}",
        f"# sha256(raw): {digest}",
        f"# rows: {len(deadly)} deadly events "
        f"({len(severities) - len(deadly)} zero-death rows dropped)",
        f"# the single {LANDMARK}-death event is tagged 9/11 for the default exclusion",
    ]
    tagged = False
    for s in deadly:
        if s == LANDMARK and not tagged:
            lines.append(f"{s}\t9/11")
            tagged = True
        else:
            lines.append(str(s))

    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    sys.stderr.write(f"wrote {args.out} ({len(deadly)} events, sha256 {digest[:12]}...)\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
