# Copyright 2026 The ssdef Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end tests of the ssdef command line tool.

Usage: test_cli.py <path to ssdef> <path to report.schema.json>
"""

import json
import subprocess
import sys
import unittest

import jsonschema

CLI = sys.argv[1]
SCHEMA = sys.argv[2]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


class ListTest(unittest.TestCase):
    def test_catalog(self):
        out = run("list", "--format", "json")
        self.assertEqual(out.returncode, 0)
        cat = json.loads(out.stdout)
        names = [c["name"] for c in cat]
        self.assertGreaterEqual(len(cat), 15)
        self.assertEqual(len(names), len(set(names)))
        for c in cat:
            self.assertTrue(c["anchor"].strip())

    def test_text_is_one_line_per_check(self):
        text = run("list").stdout.splitlines()
        cat = json.loads(run("list", "--format", "json").stdout)
        self.assertEqual(len(text), len(cat))


class VerifyTest(unittest.TestCase):
    def verify_one(self, name):
        out = run("--format", "json", "verify", name)
        rep = json.loads(out.stdout)
        self.assertEqual(len(rep["checks"]), 1)
        return out.returncode, rep["checks"][0]

    def test_aut_order(self):
        code, check = self.verify_one("aut-order")
        self.assertEqual(code, 0)
        self.assertEqual(check["status"], "pass")
        self.assertEqual(check["details"]["order"], 24)

    def test_tower_degrees(self):
        code, check = self.verify_one("tower-degrees")
        self.assertEqual(code, 0)
        self.assertEqual(check["details"]["degrees"], [6, 2, 4])

    def test_recorded_outcome_never_fails_the_run(self):
        code, check = self.verify_one("c2-identity-residue")
        self.assertEqual(code, 0)
        self.assertEqual(check["status"], "recorded-outcome")

    def test_assertable_failure_exits_one(self):
        code, check = self.verify_one("c2-action")
        self.assertEqual(check["status"], "fail")
        self.assertEqual(code, 1)

    def test_text_line_has_status_and_anchor(self):
        out = run("verify", "height")
        line = [l for l in out.stdout.splitlines() if " height " in l][0]
        self.assertTrue(line.startswith("pass"))
        self.assertIn("height 2", line)


class UsageTest(unittest.TestCase):
    def test_unknown_check(self):
        self.assertEqual(run("verify", "no-such-check").returncode, 2)

    def test_missing_subcommand(self):
        self.assertEqual(run().returncode, 2)

    def test_bad_flag_values(self):
        self.assertEqual(run("--format", "xml", "list").returncode, 2)
        self.assertEqual(run("--parallel", "maybe", "list").returncode, 2)
        self.assertEqual(run("--series-order", "2", "verify", "height").returncode, 2)
        self.assertEqual(run("--padic-precision", "0", "verify", "height").returncode, 2)

    def test_verify_without_names(self):
        self.assertEqual(run("verify").returncode, 2)


class ReportTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.first = run("report", "--format", "json")
        cls.second = run("report", "--format", "json")
        cls.serial = run("--parallel", "off", "report", "--format", "json")

    def test_schema(self):
        with open(SCHEMA) as f:
            schema = json.load(f)
        rep = json.loads(self.first.stdout)
        jsonschema.validate(rep, schema)
        self.assertEqual(rep["config"], {"k": 3, "m": 6, "N": 9})

    def test_deterministic(self):
        self.assertEqual(self.first.stdout, self.second.stdout)

    def test_parallel_order_independent(self):
        self.assertEqual(self.first.stdout, self.serial.stdout)

    def test_catalog_order(self):
        rep = json.loads(self.first.stdout)
        cat = json.loads(run("list", "--format", "json").stdout)
        self.assertEqual([c["name"] for c in rep["checks"]], [c["name"] for c in cat])

    def test_config_flags_recorded(self):
        out = run("--padic-precision", "2", "--a1-truncation", "3", "--series-order", "7", "--format", "json",
                  "verify", "lubin-tate")
        rep = json.loads(out.stdout)
        self.assertEqual(rep["config"], {"k": 2, "m": 3, "N": 7})
        self.assertEqual(out.returncode, 0)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
