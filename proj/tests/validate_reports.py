"""Run the talbot binary and check its JSON reports against docs/*.schema.json
and its CSV output against RFC 4180 parsing."""

import csv
import io
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def load_schemas(docs):
    report = json.loads((docs / "report.schema.json").read_text())
    basis = json.loads((docs / "basis.schema.json").read_text())
    registry = Registry().with_resources(
        [(s["$id"], Resource.from_contents(s)) for s in (report, basis)]
    )
    return (
        jsonschema.Draft202012Validator(report, registry=registry),
        jsonschema.Draft202012Validator(basis, registry=registry),
    )


def run(binary, args, expect=0):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}\n{proc.stderr}")


def read_csv(path):
    raw = pathlib.Path(path).read_bytes().decode()
    assert raw.endswith("\r\n"), f"{path}: rows must end in CRLF"
    rows = list(csv.reader(io.StringIO(raw, newline="")))
    width = len(rows[0])
    assert all(len(r) == width for r in rows), f"{path}: ragged rows"
    return rows


def main():
    binary, docs = sys.argv[1], pathlib.Path(sys.argv[2])
    report_v, basis_v = load_schemas(docs)
    with tempfile.TemporaryDirectory() as tmp:
        t = pathlib.Path(tmp)
        cases = {
            "decompose": ["decompose", "--n", "5"],
            "decompose3": ["decompose", "--n", "3"],
            "chambers": ["--seed", "7", "chambers", "--n", "5", "--samples", "2000", "--exhaustive"],
            "classify": ["classify", "--coords", "5,0 0,3 -2,0 -1,0 -2,-3", "--sylow"],
            "tie": ["classify", "--coords", "1,0 0,1 -1,-1"],
            "sylow": ["--seed", "3", "sylow", "--verify", "--samples", "1000",
                      "--export", str(t / "basis.json")],
        }
        for name, args in cases.items():
            run(binary, ["--json", str(t / f"{name}.json"), "--csv", str(t / f"{name}.csv"), *args])
            report = json.loads((t / f"{name}.json").read_text())
            report_v.validate(report)
            if name != "tie" and name != "classify":
                assert report["status"] == "pass", f"{name}: status {report['status']}"
            if (t / f"{name}.csv").exists():
                read_csv(t / f"{name}.csv")
        basis_v.validate(json.loads((t / "basis.json").read_text()))

        header, *rows = read_csv(t / "decompose.csv")
        assert header[0] == "irrep" and rows[0][0] == "(5)"
        header, *rows = read_csv(t / "chambers.csv")
        assert len(rows) == 120

        # A failing run must still produce a schema-valid envelope or nothing.
        run(binary, ["--json", str(t / "bad.json"), "chambers", "--n", "2"], expect=1)
        assert not (t / "bad.json").exists()
    print("reports valid")


if __name__ == "__main__":
    main()
