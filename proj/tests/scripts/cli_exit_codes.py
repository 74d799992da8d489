"""Runs the lieframe binary and checks exit codes and stderr error objects."""

import json
import pathlib
import subprocess
import sys
import tempfile


def run(binary, *args):
    return subprocess.run([binary, *args], capture_output=True, text=True)


def config(directory, name, kappa, tau="0", domain=(0, 1)):
    path = pathlib.Path(directory) / name
    path.write_text(json.dumps({"curve": {"kappa": kappa, "tau": tau, "domain": list(domain), "samples": 201}}))
    return str(path)


def main() -> int:
    binary, root = sys.argv[1], pathlib.Path(sys.argv[2])
    pair = str(root / "data/pair.json")
    failures = []
    with tempfile.TemporaryDirectory() as tmp:
        cases = [
            ("apparatus", ["--config", str(root / "data/circle.json"), "apparatus"], 0, None),
            ("missing config", ["--config", str(pathlib.Path(tmp) / "absent.json"), "apparatus"], 1, "config_not_found"),
            ("syntax error", ["--config", config(tmp, "a.json", "2*^3"), "apparatus"], 1, "syntax_error"),
            ("domain error", ["--config", config(tmp, "b.json", "1/s"), "apparatus"], 1, "expression_domain_error"),
            ("unknown command", ["--config", pair, "bogus"], 1, None),
            ("inflection", ["--config", config(tmp, "c.json", "s-0.5"), "apparatus"], 2, "non_positive_curvature"),
            ("helix", ["--config", config(tmp, "d.json", "1", "1"), "bertrand"], 2, "helical_degenerate"),
            ("verify", ["--config", pair, "verify"], 0, None),
            ("strict verify", ["--config", pair, "verify", "--strict"], 3, None),
        ]
        for label, args, code, error in cases:
            r = run(binary, *args)
            if r.returncode != code:
                failures.append(f"{label}: exit {r.returncode}, want {code}")
            if error is not None:
                last = r.stderr.strip().splitlines()[-1] if r.stderr.strip() else "{}"
                try:
                    got = json.loads(last)["error"]["code"]
                except (ValueError, KeyError, TypeError):
                    got = None
                if got != error:
                    failures.append(f"{label}: stderr error code {got!r}, want {error!r}")
    for f in failures:
        print(f)
    if not failures:
        print(f"{len(cases)} CLI cases as expected")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
