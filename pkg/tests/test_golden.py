from pathlib import Path

from polarlattice.cli import main

GOLDEN = Path(__file__).parent / "golden"


def test_theta_scan_golden(capsys):
    assert main(["theta-scan", "--grid", "0:90:91"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "theta_scan.csv").read_text()
