"""End-to-end checks of the snccoh executable: exit codes, report values,
byte-identical reruns and schema validity of every --json report."""

import argparse
import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

ARGS = None

# (command, data file, extra flags, expected exit code)
CASES = [
    ("dual-complex", "three_lines_p2", [], 0),
    ("betti", "rp2", [], 0),
    ("betti", "hollow_triangle", [], 0),
    ("betti", "three_lines_p2", [], 0),
    ("betti", "empty", [], 0),
    ("integral", "rp2", [], 0),
    ("presheaf-cohomology", "mobius_circle", [], 0),
    ("snc-cohomology", "pn_hyperplanes_2", [], 0),
    ("snc-cohomology", "pn_hyperplanes_3", [], 0),
    ("snc-cohomology", "pn_hyperplanes_4", [], 0),
    ("snc-cohomology", "pn_hyperplanes_5", [], 0),
    ("snc-cohomology", "elliptic_triangle", [], 0),
    ("forms", "three_lines_p2", ["--form-degree", "1"], 0),
    ("derham", "three_lines_p2", [], 0),
    ("hodge", "three_lines_p2", [], 0),
    ("euler", "elliptic_triangle", [], 0),
    ("euler", "curve_triangle", [], 0),
    ("euler", "curve_genus2", [], 0),
    ("toric", "p2_fan", [], 0),
    ("toric", "p3_fan", [], 0),
    ("toric", "p1xp1_fan", [], 0),
    ("verify-lemma31", "lm_2_1_1", [], 0),
    ("verify-lemma31", "lm_3_2_1_3", [], 0),
    ("bicomplex-pages", "d2_crafted", [], 0),
    ("bicomplex-pages", "elliptic_triangle", [], 0),
    ("degeneration", "d2_crafted", [], 2),
    ("degeneration", "three_lines_p2", [], 0),
    ("rational-check", "rational_cycle", [], 2),
    ("rational-check", "rational_chain", [], 0),
]


def snccoh(*argv):
    return subprocess.run([ARGS.snccoh, *map(str, argv)], capture_output=True, text=True)


def data(name):
    return Path(ARGS.data) / f"{name}.json"


def load_schema(name):
    return jsonschema.Draft202012Validator(json.loads((Path(ARGS.schemas) / name).read_text()))


class Reports(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.report_schema = load_schema("report.v1.schema.json")
        cls.input_schema = load_schema("input.v1.schema.json")

    def report(self, command, name, *flags, expect=0):
        proc = snccoh(command, data(name), "--json", *flags)
        self.assertEqual(proc.returncode, expect, f"{command} {name}: {proc.stderr}")
        return json.loads(proc.stdout)["result"]

    def test_exit_codes_schema_and_determinism(self):
        for command, name, flags, expected in CASES:
            with self.subTest(command=command, input=name):
                first = snccoh(command, data(name), "--json", *flags)
                second = snccoh(command, data(name), "--json", *flags)
                self.assertEqual(first.returncode, expected, first.stderr)
                self.assertEqual(first.stdout, second.stdout)
                report = json.loads(first.stdout)
                self.report_schema.validate(report)
                self.assertEqual(report["command"], command)
                self.assertEqual(report["status"], "ok" if expected == 0 else "verification_failed")

                text = snccoh(command, data(name), *flags)
                self.assertEqual(text.returncode, expected)
                self.assertEqual(text.stdout, snccoh(command, data(name), *flags).stdout)

    def test_data_files_match_input_schema(self):
        for path in sorted(Path(ARGS.data).glob("*.json")):
            with self.subTest(file=path.name):
                self.input_schema.validate(json.loads(path.read_text()))

    def test_hyperplanes_in_p4(self):
        result = self.report("snc-cohomology", "pn_hyperplanes_4")
        self.assertEqual(result["structure_sheaf"]["totals"], [1, 0, 0, 1, 0])
        summands = result["structure_sheaf"]["summands"]
        for degree, total in enumerate(result["structure_sheaf"]["totals"]):
            self.assertEqual(sum(s["dim"] for s in summands if s["p"] + s["q"] == degree), total)

    def test_local_model_verdict_text(self):
        proc = snccoh("verify-lemma31", data("lm_2_1_1"))
        self.assertEqual(proc.returncode, 0)
        self.assertIn("exact in all degrees <= 6", proc.stdout)
        proc = snccoh("verify-lemma31", data("lm_2_1_1"), "--degree-bound", "3", "--json")
        self.assertEqual(json.loads(proc.stdout)["result"]["degree_bound"], 3)

    def test_empty_complex(self):
        self.assertEqual(self.report("betti", "empty")["betti"], [])

    def test_values(self):
        self.assertEqual(self.report("betti", "rp2")["betti"], [1, 0, 0])
        torsion = self.report("integral", "rp2")["degrees"][2]["torsion"]
        self.assertEqual(torsion, ["2"])
        self.assertEqual(self.report("presheaf-cohomology", "mobius_circle")["cohomology"], [0, 0])
        self.assertEqual(self.report("euler", "curve_genus2")["euler_characteristic"], -2)
        self.assertEqual(self.report("euler", "curve_triangle")["euler_characteristic"], 0)
        self.assertEqual(self.report("snc-cohomology", "elliptic_triangle")["structure_sheaf"]["totals"], [1, 4, 0])
        hodge = self.report("hodge", "three_lines_p2")
        self.assertEqual(hodge["antidiagonal_sums"], [1, 1, 3])
        self.assertEqual(hodge["derham_totals"], [1, 1, 3])
        toric = self.report("toric", "p3_fan")
        self.assertEqual(toric["betti"], [1, 0, 1])
        self.assertTrue(toric["completeness"].startswith("uncertified"))
        rational = self.report("rational-check", "rational_cycle", expect=2)
        self.assertEqual(rational["obstruction_degrees"], [1])
        self.assertTrue(rational["conditional"])

    def test_perturbed_hodge_table_exits_2(self):
        doc = json.loads(data("three_lines_p2").read_text())
        doc["tables"][-1]["dim"] += 1
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump(doc, f)
        proc = snccoh("hodge", f.name, "--json")
        Path(f.name).unlink()
        self.assertEqual(proc.returncode, 2)
        self.report_schema.validate(json.loads(proc.stdout))


class InputErrors(unittest.TestCase):
    def run_doc(self, command, doc):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write(doc if isinstance(doc, str) else json.dumps(doc))
        try:
            return snccoh(command, f.name)
        finally:
            Path(f.name).unlink()

    def test_missing_file(self):
        self.assertEqual(snccoh("betti", Path(ARGS.data) / "no_such_file.json").returncode, 1)

    def test_malformed_json(self):
        self.assertEqual(self.run_doc("betti", "{not json").returncode, 1)

    def test_schema_error_names_pointer(self):
        doc = {"kind": "divisor", "components": [{"dim": 1}, {"dim": -1}]}
        proc = self.run_doc("snc-cohomology", doc)
        self.assertEqual(proc.returncode, 1)
        self.assertIn("SchemaError", proc.stderr)
        self.assertIn("/components/1/dim", proc.stderr)

    def test_unsorted_tuple(self):
        proc = self.run_doc("betti", {"kind": "complex", "vertex_count": 3, "facets": [[1, 0]]})
        self.assertEqual(proc.returncode, 1)
        self.assertIn("/facets/0", proc.stderr)

    def test_wrong_kind(self):
        proc = self.run_doc("toric", {"kind": "complex", "vertex_count": 1, "facets": [[0]]})
        self.assertEqual(proc.returncode, 1)

    def test_missing_table(self):
        doc = {"kind": "divisor", "ambient_dim": 2, "components": [{"dim": 1}, {"dim": 1}], "strata": [[0, 1]]}
        proc = self.run_doc("snc-cohomology", doc)
        self.assertEqual(proc.returncode, 1)
        self.assertIn("MissingTable", proc.stderr)

    def test_unknown_command(self):
        self.assertNotEqual(snccoh("no-such-command", data("rp2")).returncode, 0)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--snccoh", required=True)
    parser.add_argument("--data", required=True)
    parser.add_argument("--schemas", required=True)
    ARGS, rest = parser.parse_known_args()
    unittest.main(argv=[sys.argv[0], *rest])
