"""End-to-end checks of the command-line tool.

Usage: cli_test.py GRIDKNOT_BINARY SCHEMA_FILE
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = None
SCHEMA = None

TRIVIAL = "2\n1-2 1-2\n"
TREFOIL = "5\n1-4 3-5 2-4 1-3 2-5\n"
CURL = "5\n1-3 2-5 1-4 3-5 2-4\n"


def run(*args, stdin=None):
    return subprocess.run([BINARY, *args], input=stdin, capture_output=True, text=True)


def check(name, value):
    schema = dict(SCHEMA)
    schema["$ref"] = "#/$defs/" + name
    jsonschema.validate(value, schema)


class Cli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, content):
        path = os.path.join(self.dir, name)
        with open(path, "w") as f:
            f.write(content)
        return path

    def json_of(self, *args, code=0, schema=None):
        r = run(*args)
        self.assertEqual(r.returncode, code, r.stderr)
        value = json.loads(r.stdout)
        if schema:
            check(schema, value)
        return value

    def test_info_of_trivial_diagram(self):
        grid = self.write("trivial2.grid", TRIVIAL)
        out = self.json_of("info", "--grid", grid, schema="info")
        self.assertEqual(out, {"n": 2, "crossings": 0, "components": 1, "total_length": 4})
        self.assertEqual(list(out), ["n", "crossings", "components", "total_length"])

    def test_grid_from_stdin_and_json_input(self):
        r = run("info", "--grid", "-", stdin=TREFOIL)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout)["crossings"], 3)
        grid = self.write("t.json", json.dumps({"n": 2, "columns": [[1, 2], [1, 2]]}))
        self.assertEqual(self.json_of("info", "--grid", grid)["n"], 2)

    def test_formula_values(self):
        expected = {
            (8, "exterior_exchange"): 156, (8, "exterior_merge"): 78, (8, "rotation"): 79,
            (3, "exterior_exchange"): 8, (3, "exterior_merge"): 4, (3, "rotation"): 5,
        }
        for (n, kind), value in expected.items():
            out = self.json_of("bounds", "--formula", str(n), kind, schema="bound_value")
            self.assertEqual(out, value)

    def test_small_census_has_no_stuck_trivial_knot(self):
        out = self.json_of("census", "--n", "7", "--stuck", "--trivial", schema="census")
        self.assertEqual(out["trivial_stuck_count"], 0)
        self.assertEqual(out["n"], 7)

    def test_census_result_does_not_depend_on_workers(self):
        one = os.path.join(self.dir, "one.txt")
        four = os.path.join(self.dir, "four.txt")
        a = self.json_of("census", "--n", "6", "--knots", "--out", one, schema="census")
        b = self.json_of("--jobs", "4", "census", "--n", "6", "--knots", "--out", four, schema="census")
        with open(one) as f, open(four) as g:
            self.assertEqual(f.read(), g.read())
        for key in ("raw_count", "orbit_count", "knot_count", "accepted"):
            self.assertEqual(a[key], b[key])
        self.assertEqual(b["workers"], 4)

    def test_stuck_trivial_eight_grids_need_exterior_exchanges(self):
        out_file = os.path.join(self.dir, "s8.txt")
        out = self.json_of("census", "--n", "8", "--stuck", "--trivial", "--out", out_file, schema="census")
        self.assertGreater(out["trivial_stuck_count"], 0)
        with open(out_file) as f:
            lines = f.read().split("\n")
        grids = ["\n".join(lines[i:i + 2]) + "\n" for i in range(0, len(lines) - 1, 2)]
        self.assertEqual(len(grids), out["trivial_stuck_count"])
        for text in grids:
            grid = self.write("s.grid", text)
            kinds = {m["kind"] for m in self.json_of("moves", "--grid", grid, schema="moves")}
            self.assertEqual(kinds, {"ExteriorExchange", "Rotation"})
            self.assertTrue(self.json_of("simplify", "--grid", grid, "--needs-exterior",
                                         schema="needs_exterior")["needs_exterior"])

    def test_max_stats(self):
        out = self.json_of("census", "--n", "5", "--max-stats", schema="max_stats")
        self.assertEqual((out["max_crossings"], out["max_length"]), (7, 24))
        self.assertEqual((out["crossings_bound"], out["length_bound"]), (7, 24))

    def test_render_round_trip_and_determinism(self):
        grid = self.write("t.grid", TREFOIL)
        for fmt in ("ascii", "svg"):
            first = run("render", "--grid", grid, "--format", fmt)
            second = run("render", "--grid", grid, "--format", fmt)
            self.assertEqual(first.stdout, second.stdout)
            out = json.loads(first.stdout)
            check("render", out)
            again = self.write("again.json", json.dumps(out["grid"]))
            self.assertEqual(self.json_of("info", "--grid", again), self.json_of("info", "--grid", grid))
        svg = json.loads(run("render", "--grid", grid, "--format", "svg").stdout)["drawing"]
        embedded = svg.split("<metadata>")[1].split("</metadata>")[0]
        self.assertEqual(json.loads(embedded), {"n": 5, "columns": [[1, 4], [3, 5], [2, 4], [1, 3], [2, 5]]})

    def test_moves_and_apply(self):
        grid = self.write("t.grid", TRIVIAL.replace("2\n1-2 1-2", "3\n1-2 1-3 2-3"))
        moves = self.json_of("moves", "--grid", grid, schema="moves")
        merge = next(m for m in moves if m["kind"] == "InteriorMerge")
        out = self.json_of("moves", "--grid", grid, "--apply", json.dumps(merge), schema="grid")
        self.assertEqual(out["n"], 2)

    def test_bounds_for_a_move(self):
        grid = self.write("t.grid", TREFOIL)
        move = json.dumps({"kind": "Rotation", "axis": "Horizontal", "site": {"direction": "top_to_bottom"}})
        out = self.json_of("bounds", "--grid", grid, "--move", move, schema="bounds")
        self.assertTrue(out["holds"])
        self.assertEqual(out["total"], sum(j["sigma_simple"] for j in out["jumps"]))
        self.assertEqual(out["bound"], 25)

    def test_realize_and_replay(self):
        grid = self.write("t.grid", TREFOIL)
        move = self.write("m.json", json.dumps(
            {"kind": "Rotation", "axis": "Vertical", "site": {"direction": "left_to_right"}}))
        trace_file = os.path.join(self.dir, "trace.json")
        frames = os.path.join(self.dir, "frames")
        summary = self.json_of("realize", "--grid", grid, "--move", move, "--out", trace_file,
                               "--frames", frames, schema="realize_summary")
        with open(trace_file) as f:
            trace = json.load(f)
        check("trace", trace)
        self.assertEqual(len(trace["moves"]), summary["moves"])
        self.assertLessEqual(summary["moves"], summary["budget"])
        self.assertEqual(len(os.listdir(frames)), summary["moves"])
        out = self.json_of("replay", trace_file, schema="replay")
        self.assertTrue(out["matches"])
        self.assertEqual(out["final_gauss"], trace["final_gauss"])
        inline = self.json_of("realize", "--grid", grid, "--move", move, schema="trace")
        self.assertEqual(inline["final_gauss"], trace["final_gauss"])

    def test_forged_trace_is_rejected(self):
        grid = self.write("t.grid", TREFOIL)
        move = json.dumps({"kind": "Rotation", "axis": "Vertical", "site": {"direction": "left_to_right"}})
        trace = self.json_of("realize", "--grid", grid, "--move", move)
        trace["final_gauss"] = ""
        path = self.write("forged.json", json.dumps(trace))
        out = self.json_of("replay", path, code=1, schema="replay")
        self.assertFalse(out["matches"])
        trace["moves"] = [{"kind": "R1_delete", "site": {"crossings": [1]}}]
        path = self.write("forged2.json", json.dumps(trace))
        r = run("replay", path)
        self.assertEqual(r.returncode, 1)
        self.assertEqual(json.loads(r.stderr)["error"], "IllegalMoveAtSite")

    def test_simplify_is_seeded_and_witnessed(self):
        witness = os.path.join(self.dir, "w.json")
        a = self.json_of("--seed", "5", "simplify", "--scramble", "12", "--witness-out", witness, schema="simplify")
        b = self.json_of("--seed", "5", "simplify", "--scramble", "12", schema="simplify")
        self.assertEqual(a, b)
        self.assertEqual(a["verdict"], "trivial")
        with open(witness) as f:
            check("witness", json.load(f))
        out = self.json_of("replay", witness, schema="replay")
        self.assertEqual(out["final"], {"n": 2, "columns": [[1, 2], [1, 2]]})

    def test_trefoil_is_not_trivial(self):
        grid = self.write("t.grid", TREFOIL)
        out = self.json_of("simplify", "--grid", grid, schema="simplify")
        self.assertEqual(out["verdict"], "not_trivial")
        self.assertNotIn("witness", out)
        curl = self.write("c.grid", CURL)
        self.assertEqual(self.json_of("simplify", "--grid", curl)["verdict"], "not_trivial")

    def test_limits_are_reported_as_errors(self):
        grid = self.write("t.grid", TREFOIL)
        r = run("--limit-states", "1", "simplify", "--grid", grid)
        self.assertEqual(r.returncode, 1)
        err = json.loads(r.stderr)
        check("error", err)
        self.assertEqual(err["error"], "LimitExceeded")

    def test_validate(self):
        good = self.write("g.grid", TREFOIL)
        self.assertTrue(self.json_of("validate", "--grid", good, schema="validate")["valid"])
        bad = self.write("b.grid", "2\n1-1 1-2\n")
        out = self.json_of("validate", "--grid", bad, code=1, schema="validate")
        self.assertEqual(out["error"], "DegenerateColumn")

    def test_exit_codes(self):
        grid = self.write("t.grid", TREFOIL)
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("info").returncode, 2)
        self.assertEqual(run("bounds", "--formula", "8").returncode, 2)
        self.assertEqual(run("bounds", "--formula", "x", "rotation").returncode, 2)
        self.assertEqual(run("--help").returncode, 0)
        for args in (("info", "--grid", os.path.join(self.dir, "missing")),
                     ("render", "--grid", grid, "--format", "png"),
                     ("bounds", "--formula", "8", "merge"),
                     ("moves", "--grid", grid, "--apply", '{"kind":"InteriorMerge","axis":"Horizontal","site":{"edge":1}}')):
            r = run(*args)
            self.assertEqual(r.returncode, 1, args)
            self.assertEqual(r.stdout, "")
            check("error", json.loads(r.stderr))

    def test_pretty_tables(self):
        grid = self.write("t.grid", TRIVIAL)
        r = run("info", "--grid", grid, "--pretty")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.split("\n")[0].split(), ["n", "2"])


if __name__ == "__main__":
    BINARY = os.path.abspath(sys.argv[1])
    with open(sys.argv[2]) as f:
        SCHEMA = json.load(f)
    unittest.main(argv=[sys.argv[0], "-v"])
