import contextlib
import io
import json
import os
import tempfile
import unittest
from unittest import mock

from suite_utils.decorators import number
from suite_utils.timeout import timeout
from algebra import petersen_M
from cli import PlaneRow, main, plane_row, verify_tasks
from constants import PLANE_COLUMNS, PLANE_HEADER, ExitCode
from core_classifier import retraction_target


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stderr(err):
        code = main(list(argv), out=out)
    return code, out.getvalue(), err.getvalue()


class TestCli(unittest.TestCase):

    @number("8.1")
    def test_classify_petersen(self):
        code, out, _ = run("classify", "5", "2")
        self.assertEqual(code, ExitCode.OK)
        row = json.loads(out)
        self.assertTrue(row["core"])
        self.assertTrue(row["vertex_transitive"])
        self.assertFalse(row["group_graph"])
        self.assertTrue(row["two_gen_monoid_graph"])
        self.assertIsNone(row["aut_order_expected"])
        self.assertEqual(row["aut_order_found"], 120)
        self.assertEqual(list(row), list(PLANE_COLUMNS))

    @number("8.2")
    def test_classify_others(self):
        row = json.loads(run("classify", "8", "3")[1])
        self.assertTrue(row["bipartite"])
        self.assertTrue(row["group_graph"])
        self.assertFalse(row["core"])
        row = json.loads(run("classify", "15", "3")[1])
        self.assertFalse(row["core"])
        self.assertIsNone(row["aut_order_found"])
        self.assertEqual(row["aut_order_expected"], 30)
        code, out, _ = run("classify", "7", "2", "--format", "text")
        self.assertEqual(code, ExitCode.OK)
        self.assertIn("vertex_transitive: false", out)
        self.assertIn("aut_order_found: 14", out)

    @number("8.3")
    def test_usage_errors(self):
        code, _, err = run("classify", "5", "3")
        self.assertEqual(code, ExitCode.USAGE)
        self.assertIn("error", err)
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(["classify", "5"])
        self.assertEqual(ctx.exception.code, ExitCode.USAGE)
        code, _, err = run("cayley", "heawood")
        self.assertEqual(code, ExitCode.USAGE)
        self.assertIn("petersen-s", err)
        self.assertEqual(run("cayley", "cay1")[0], ExitCode.USAGE)
        self.assertEqual(run("retract", "5", "2")[0], ExitCode.USAGE)

    @number("8.4")
    def test_budget_env(self):
        with mock.patch.dict(os.environ, {"GP_ORACLE_BUDGET": "many"}):
            self.assertEqual(run("classify", "5", "2")[0], ExitCode.USAGE)

    @number("8.5")
    def test_table(self):
        code, out, _ = run("table", "petersen-m")
        self.assertEqual(code, ExitCode.OK)
        data = json.loads(out)
        self.assertEqual(data["table"], petersen_M().to_lists())
        self.assertEqual(data["connection"], [1, 6])
        data = json.loads(run("table", "cay1", "10", "4")[1])
        self.assertEqual(data["order"], 20)

    @number("8.6")
    def test_cayley(self):
        code, out, _ = run("cayley", "cay1", "10", "4")
        self.assertEqual(code, ExitCode.OK)
        self.assertTrue(out.startswith("digraph cay1 {"))
        self.assertEqual(out.count("->"), 40)
        code, out, _ = run("cayley", "petersen-m", "--format", "json")
        self.assertEqual(code, ExitCode.OK)
        self.assertEqual(json.loads(out)["iso_target"], [5, 2])

    @number("8.7")
    def test_retract(self):
        code, out, _ = run("retract", "15", "3")
        self.assertEqual(code, ExitCode.OK)
        data = json.loads(out)
        self.assertEqual((data["n"], data["k"]), (15, 3))
        self.assertEqual(data["target"], retraction_target(15, 3))
        self.assertEqual(len(data["map"]), 30)
        self.assertTrue(set(data["map"]) <= set(data["target"]))
        code, out, _ = run("retract", "10", "4", "--format", "dot")
        self.assertEqual(code, ExitCode.OK)
        self.assertTrue(out.startswith("graph retraction {"))

    @number("8.8")
    def test_check_table(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "m.json")
            with open(path, "w") as f:
                json.dump({"order": 10, "table": petersen_M().to_lists(), "connection": [1, 6]}, f)
            code, out, _ = run("check-table", path, "--target", "5", "2")
            self.assertEqual(code, ExitCode.OK)
            self.assertEqual(json.loads(out)["iso_target"], [5, 2])
            self.assertEqual(run("check-table", path, "--target", "7", "2")[0], ExitCode.DISAGREEMENT)
            code, out, _ = run("check-table", path)
            self.assertEqual(code, ExitCode.OK)
            summary = json.loads(out)
            self.assertEqual(summary["identity"], 0)
            self.assertEqual(summary["loop_count"], 5)
            self.assertEqual(summary["edges"], 15)

            bad = os.path.join(tmp, "bad.json")
            with open(bad, "w") as f:
                f.write("{not json")
            self.assertEqual(run("check-table", bad)[0], ExitCode.USAGE)
            self.assertEqual(run("check-table", os.path.join(tmp, "missing.json"))[0], ExitCode.USAGE)

    @number("8.9")
    @timeout(300)
    def test_scan(self):
        code, out, _ = run("scan", "--n-max", "8")
        self.assertEqual(code, ExitCode.OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], PLANE_HEADER)
        self.assertEqual(lines[1], ",".join(PLANE_COLUMNS))
        self.assertEqual(len(lines), 2 + 12)
        self.assertEqual(lines[2], "3,1,false,false,true,true,true,false,12,12")
        self.assertEqual(out, run("scan", "--n-max", "8")[1])
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "plane.csv")
            self.assertEqual(run("scan", "--nmax", "8", "--out", path)[0], ExitCode.OK)
            with open(path) as f:
                self.assertEqual(f.read(), out)

    @number("8.10")
    @timeout(300)
    def test_verify(self):
        code, out, _ = run("verify", "--n-max", "7", "--check", "core", "--check", "retract")
        self.assertEqual(code, ExitCode.OK)
        self.assertIn("# core: 7 agree, 0 disagree, 0 inconclusive", out)
        code, out, _ = run("--budget", "1", "verify", "--n-max", "5", "--check", "core")
        self.assertEqual(code, ExitCode.INCONCLUSIVE)
        self.assertIn("inconclusive", out)

    @number("8.11")
    def test_verify_clamps(self):
        with self.assertLogs("cli", level="WARNING") as logs:
            tasks = verify_tasks(50, ["endo"])
        self.assertTrue(any("clamped" in line for line in logs.output))
        self.assertEqual(max(n for _, n, _, _ in tasks), 12)
        self.assertTrue(all(name == "endo" for name, _, _, _ in tasks))

    @number("8.12")
    @timeout(300)
    def test_verify_jobs(self):
        serial = run("verify", "--n-max", "8", "--check", "aut", "--check", "coprime")
        parallel = run("verify", "--n-max", "8", "--check", "aut", "--check", "coprime", "--jobs", "2")
        self.assertEqual(serial[0], ExitCode.OK)
        self.assertEqual(serial[1], parallel[1])

    @number("8.13")
    def test_plane_row(self):
        row = plane_row(10, 2)
        self.assertIsInstance(row, PlaneRow)
        self.assertTrue(row.core and row.vertex_transitive)
        self.assertFalse(row.two_gen_monoid_graph)
        self.assertEqual(row.aut_order_found, 120)
        row = plane_row(13, 5, brute_aut=True)
        self.assertEqual(row.aut_order_found, row.aut_order_expected)

    @number("8.14")
    def test_graph(self):
        code, out, _ = run("graph", "5", "2")
        self.assertEqual(code, ExitCode.OK)
        data = json.loads(out)
        self.assertEqual(data["verdict"], {"status": "core", "reason": "c2", "d": 1, "a": 3})
        self.assertEqual(data["odd_girth"], 5)
        self.assertEqual((data["graph"]["n"], data["graph"]["k"]), (5, 2))
        self.assertEqual(len(data["graph"]["edges"]), 15)
        self.assertEqual(data["graph"]["vertices"][5], "v0")

        data = json.loads(run("graph", "8", "3")[1])
        self.assertEqual(data["verdict"]["status"], "bipartite")
        self.assertIsNone(data["verdict"]["reason"])
        self.assertIsNone(data["odd_girth"])

        code, out, _ = run("graph", "7", "2", "--format", "dot")
        self.assertEqual(code, ExitCode.OK)
        self.assertTrue(out.startswith("graph G_7_2 {"))
        self.assertEqual(out.count(" -- "), 21)

        self.assertEqual(run("graph", "6", "3")[0], ExitCode.USAGE)


if __name__ == '__main__':
    unittest.main()
