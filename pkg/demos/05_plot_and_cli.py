"""Drive the command-line tool from Python and draw the envelopes.

Run: python demos/05_plot_and_cli.py   (writes into demos/out/)
"""
from pathlib import Path

from frame_noise.cli import main

here = Path(__file__).parent
case = here / "example1.json"
out = here / "out"
out.mkdir(exist_ok=True)

main(["analyze", str(case)])
main(["verify", str(case), "--grid", "0.25"])
main(["compare", str(case), "--direction", "max"])

# SVG with one trace per envelope and a marker at every worst-case time,
# plus the same traces as CSV for other plotting tools.
main(["plot", str(case), "-o", str(out / "example1.svg"), "--csv", str(out / "example1.csv")])
print("\nwrote", out / "example1.svg")

# Seeded corpus round trip: generate case files, then benchmark them.
main(["gen", "--count", "20", "--seed", "7", "--negative-prob", "0.5", "-o", str(out / "corpus")])
main(["bench", str(out / "corpus"), "--report", str(out / "bench.csv")])
