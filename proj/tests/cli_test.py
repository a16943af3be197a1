"""End-to-end checks of the braidkit command line: exit codes, output
content, byte-determinism of --json, and validation against schemas/."""

import json
import pathlib
import subprocess
import sys
import unittest

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

BINARY = pathlib.Path(sys.argv.pop(1))
ROOT = pathlib.Path(__file__).resolve().parent.parent
SCHEMAS = ROOT / "schemas"
DATA = ROOT / "data"


def load_registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        contents = json.loads(path.read_text())
        resources.append((contents["$id"], Resource.from_contents(contents)))
    return Registry().with_resources(resources)


REGISTRY = load_registry()


def validator(name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    return Draft202012Validator(schema, registry=REGISTRY)


def run(*args):
    return subprocess.run([str(BINARY), *map(str, args)], capture_output=True, text=True)


class Invariants(unittest.TestCase):
    def test_trefoil_text(self):
        r = run("invariants", "--strands", "2", "--word", "1 1 1")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("alexander         : t^-1 - 1 + t", r.stdout)
        self.assertIn("genus bound       : 1", r.stdout)

    def test_trefoil_json(self):
        r = run("invariants", "--strands", "2", "--word", "1 1 1", "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        validator("invariant_report").validate(doc)
        self.assertEqual(doc["alexander"], {"min_exp": -1, "coeffs": [1, -1, 1]})
        self.assertEqual(doc["genus_bound"], 1)
        self.assertEqual(doc["jones"]["text"], "t + t^3 - t^4")

    def test_unknot(self):
        doc = json.loads(run("invariants", "--strands", "2", "--word", "1", "--json").stdout)
        self.assertEqual(doc["components"], 1)
        self.assertEqual(doc["self_linking"], -1)
        self.assertEqual(doc["alexander_text"], "1")
        self.assertEqual(doc["jones"]["text"], "1")

    def test_family_beta0(self):
        r = run("invariants", "--strands", "4", "--family", "beta", "--n", "0", "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        validator("invariant_report").validate(doc)
        self.assertEqual(doc["alexander_breadth"], 2)
        self.assertEqual(doc["surface"]["genus"], 1)

    def test_bandword_and_no_jones(self):
        r = run("invariants", "--strands", "3", "--bandword", "B(1,3) 2", "--json", "--no-jones")
        doc = json.loads(r.stdout)
        validator("invariant_report").validate(doc)
        self.assertIsNone(doc["jones"])
        self.assertEqual(doc["surface"]["euler_characteristic"], 1)

    def test_max_strands_guard(self):
        r = run("invariants", "--strands", "5", "--word", "1 2 3 4", "--max-strands", "4")
        self.assertEqual(r.returncode, 2)
        self.assertIn("limited to 4 strands", r.stderr)

    def test_parse_error(self):
        r = run("invariants", "--strands", "3", "--word", "1 x")
        self.assertEqual(r.returncode, 2)
        self.assertIn("parse error", r.stderr)

    def test_usage_error(self):
        self.assertEqual(run("invariants").returncode, 2)
        self.assertEqual(run("no-such-command").returncode, 2)
        self.assertEqual(run("invariants", "--strands", "2", "--word", "3").returncode, 2)

    def test_deterministic(self):
        args = ("invariants", "--strands", "4", "--word", "1 -2 3 B(1,4) -1", "--json")
        self.assertEqual(run(*args).stdout, run(*args).stdout)


class Family(unittest.TestCase):
    def check(self, kind, n, genus, certified):
        r = run("family", kind, n, "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        validator("family").validate(doc)
        self.assertEqual(doc["surface"]["genus"], genus)
        self.assertEqual(doc["genus_certified"], certified)
        return doc

    def test_gamma1(self):
        self.check("gamma", 1, 2, True)

    def test_beta1(self):
        doc = self.check("beta", 1, 3, True)
        self.assertEqual(doc["alexander_genus_bound"], 3)

    def test_beta0(self):
        self.check("beta", 0, 1, True)

    def test_text(self):
        r = run("family", "beta", 1)
        self.assertIn("3 <= g <= 3 (certified)", r.stdout)

    def test_bad_kind(self):
        self.assertEqual(run("family", "delta", 1).returncode, 2)


class Unknotify(unittest.TestCase):
    def test_worked_example(self):
        r = run("unknotify", DATA / "m8_20_bandword.json", DATA / "m8_20_sites.json", "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        validator("unknotify").validate(doc)
        cert = doc["certificate"]
        self.assertTrue(cert["passed"])
        self.assertEqual(cert["gamma_components"], 1)
        self.assertEqual(cert["gamma_self_linking"], -1)
        self.assertEqual(cert["gamma_alexander_text"], "1")
        self.assertEqual(cert["gamma_jones"]["text"], "1")

    def test_passthrough(self):
        r = run("unknotify", DATA / "unknot_bandword.json", DATA / "no_sites.json", "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        self.assertEqual(doc["beta_prime"]["letters"], [1])
        self.assertEqual(doc["gamma"]["letters"], [1])

    def test_corrupted_site(self):
        r = run("unknotify", DATA / "m8_20_bandword.json", DATA / "corrupted_sites.json")
        self.assertEqual(r.returncode, 2)
        self.assertIn("pattern mismatch", r.stderr)

    def test_certificate_failure(self):
        # m(8_20) with no sites: beta' = beta is not an unknot.
        r = run("unknotify", DATA / "m8_20_bandword.json", DATA / "no_sites.json")
        self.assertEqual(r.returncode, 1)
        self.assertIn("certificate failure", r.stderr)

    def test_missing_file(self):
        self.assertEqual(run("unknotify", "nope.json", DATA / "no_sites.json").returncode, 2)

    def test_inputs_match_schemas(self):
        validator_q = Draft202012Validator(
            {"$ref": "https://braidkit.local/schemas/common.schema.json#/$defs/qp_bandword"}, registry=REGISTRY)
        validator_s = Draft202012Validator(
            {"$ref": "https://braidkit.local/schemas/common.schema.json#/$defs/sites"}, registry=REGISTRY)
        validator_q.validate(json.loads((DATA / "m8_20_bandword.json").read_text()))
        validator_s.validate(json.loads((DATA / "m8_20_sites.json").read_text()))


class VerifyPaper(unittest.TestCase):
    def test_json_and_exit_status(self):
        r = run("verify-paper", "--json", "--no-jones")
        doc = json.loads(r.stdout)
        validator("verify").validate(doc)
        self.assertEqual([c["criterion"] for c in doc["checks"]], list(range(1, 10)))
        self.assertEqual(r.returncode, 0 if doc["passed"] else 1)
        for check in doc["checks"]:
            self.assertFalse(any("Jones" in d for d in check["details"]), check["title"])

    def test_budget_zero(self):
        r = run("verify-paper", "--budget", "0")
        self.assertEqual(r.returncode, 1)
        self.assertIn("exceeded step budget of 0", r.stderr)


if __name__ == "__main__":
    unittest.main(verbosity=2)
