"""End-to-end checks of the ellcirc executable.

Usage: test_cli.py <ellcirc binary> <report.schema.json> <scratch dir>
"""

import json
import math
import os
import subprocess
import sys
import unittest
import xml.etree.ElementTree as ET

import jsonschema

BINARY, SCHEMA_PATH, SCRATCH = sys.argv[1:4]
SVG_NS = "{http://www.w3.org/2000/svg}"


def run(*args):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout


def run_json(*args):
    code, out = run(*args)
    return code, json.loads(out), out


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA_PATH, encoding="utf-8") as fh:
            schema = json.load(fh)
        jsonschema.Draft202012Validator.check_schema(schema)
        cls.validator = jsonschema.Draft202012Validator(schema)
        os.makedirs(SCRATCH, exist_ok=True)

    def valid(self, doc):
        errors = [e.message for e in self.validator.iter_errors(doc)]
        self.assertEqual(errors, [])

    def residuals_within(self, doc):
        for name, res in doc.get("residuals", {}).items():
            self.assertLessEqual(res["value"], res["tolerance"], name)

    def test_measures_case3(self):
        code, doc, _ = run_json("measures", "--a", "2", "--b", "1", "--r", "1.5")
        self.assertEqual(code, 0)
        self.valid(doc)
        self.assertEqual(doc["case_id"], 3)
        self.assertAlmostEqual(doc["areas"]["a_2"], 8.5 * math.pi, delta=1e-12)
        self.residuals_within(doc)

    def test_measures_circle(self):
        code, doc, _ = run_json("measures", "--a", "1", "--b", "1", "--r", "3")
        self.assertEqual(code, 0)
        self.valid(doc)
        self.assertEqual(doc["case_id"], 5)
        self.assertAlmostEqual(doc["measures"]["m_i"], 8 * math.pi**2, delta=1e-12)

    def test_input_errors(self):
        for args in (
            ("measures", "--a", "2", "--b", "1", "--r", "0"),
            ("measures", "--a", "1", "--b", "2", "--r", "1"),
            ("measures", "--a", "2", "--b", "1"),
            ("simulate", "--a", "2", "--b", "1", "--r", "1", "--mode", "areas", "--samples", "9999"),
            ("curves", "--a", "2", "--b", "1", "--r", "1", "--n", "63", "--out", os.path.join(SCRATCH, "x.svg")),
            ("probabilities", "--a", "2", "--b", "1", "--r", "1", "--s", "10", "--t", "10",
             "--sigma", "1", "--sigma-deg", "60"),
            ("frobnicate",),
        ):
            code, doc, _ = run_json(*args)
            self.assertEqual(code, 2, args)
            self.valid(doc)
            self.assertEqual(doc["error"]["kind"], "input_error")

    def test_unwritable_output_names_path(self):
        path = os.path.join(SCRATCH, "missing-dir", "out.svg")
        code, doc, _ = run_json("curves", "--a", "2", "--b", "1", "--r", "1", "--out", path)
        self.assertEqual(code, 2)
        self.assertIn(path, doc["error"]["message"])

    def test_probabilities(self):
        code, doc, _ = run_json("probabilities", "--a", "2", "--b", "1", "--r", "1.5", "--s", "10", "--t", "10")
        self.assertEqual(code, 0)
        self.valid(doc)
        self.assertAlmostEqual(doc["input"]["lattice"]["sigma"], math.pi / 2, delta=0)
        self.assertAlmostEqual(doc["probabilities"]["p_2"], 0.085 * math.pi, delta=1e-12)
        self.residuals_within(doc)

    def test_sigma_degrees(self):
        _, rad, _ = run_json("probabilities", "--a", "2", "--b", "1", "--r", "0.8", "--s", "10", "--t", "10",
                             "--sigma", repr(math.pi / 3))
        _, deg, _ = run_json("probabilities", "--a", "2", "--b", "1", "--r", "0.8", "--s", "10", "--t", "10",
                             "--sigma-deg", "60")
        self.assertAlmostEqual(rad["probabilities"]["p_2"], deg["probabilities"]["p_2"], delta=1e-15)

    def test_assumption_violation(self):
        code, doc, _ = run_json("probabilities", "--a", "2", "--b", "1", "--r", "1.5", "--s", "6", "--t", "10")
        self.assertEqual(code, 3)
        self.valid(doc)
        self.assertIn("2(a+r) <= min(s,t)", doc["error"]["message"])

    def test_simulate_deterministic(self):
        args = ("simulate", "--a", "2", "--b", "1", "--r", "1.5", "--s", "10", "--t", "10",
                "--samples", "200000", "--seed", "42")
        code1, doc, out1 = run_json(*args)
        code2, _, out2 = run_json(*args, "--threads", "3")
        self.assertEqual(code1, 0)
        self.assertEqual(code2, 0)
        self.assertEqual(out1, out2)
        self.valid(doc)
        self.assertLessEqual(doc["estimates"]["max_abs_z"], 4)

    def test_simulate_areas_case1(self):
        code, doc, _ = run_json("simulate", "--a", "2", "--b", "1", "--r", "0.3", "--mode", "areas",
                                "--samples", "100000", "--seed", "3")
        self.assertEqual(code, 0)
        self.valid(doc)
        names = [c["name"] for c in doc["estimates"]["classes"]]
        self.assertEqual(names, ["A_i01", "A_i10", "A_2", "A_4"])

    def test_segment(self):
        code, doc, _ = run_json("segment", "--l", "2", "--r", "1.5")
        self.assertEqual(code, 0)
        self.valid(doc)
        self.assertAlmostEqual(doc["measures"]["m_i"], 9.73102694750524, delta=1e-10)
        _, doc, _ = run_json("segment", "--l", "3", "--r", "1.5")
        self.assertEqual(doc["measures"]["m_i"], 0)
        _, doc, _ = run_json("segment", "--l", "2", "--r", "1.5", "--s", "10", "--t", "10")
        self.valid(doc)
        self.assertAlmostEqual(doc["probabilities"]["p_i"], doc["measures"]["m_i"] / (2 * math.pi * 100), delta=1e-15)
        self.residuals_within(doc)

    def test_classify(self):
        for r, x0, expected in ((1.5, 0, "FourPoints"), (0.4, 0, "CircleInsideEllipse"), (1, 20, "DisjointOutside")):
            code, doc, _ = run_json("classify", "--a", "2", "--b", "1", "--r", str(r), "--x0", str(x0))
            self.assertEqual(code, 0)
            self.valid(doc)
            self.assertEqual(doc["relation"], expected)
            self.assertEqual(doc["agreement"], "agree")

    def test_classify_degenerate(self):
        code, doc, _ = run_json("classify", "--a", "2", "--b", "1", "--r", "1", "--x0", "3")
        self.assertEqual(code, 0)
        self.valid(doc)
        self.assertEqual(doc["status"], "degenerate")
        self.assertEqual(doc["relation"], "Degenerate")

    def svg_points(self, path):
        root = ET.parse(path).getroot()
        self.assertEqual(root.tag, SVG_NS + "svg")
        self.assertEqual(root.get("version"), "1.1")
        vx, vy, vw, vh = map(float, root.get("viewBox").split())
        pts = []
        for el in root.iter(SVG_NS + "polygon"):
            for pair in el.get("points").split():
                x, y = map(float, pair.split(","))
                pts.append((x, y))
        cusps = [(float(c.get("cx")), float(c.get("cy"))) for c in root.iter(SVG_NS + "circle")]
        return root, (vx, vy, vw, vh), pts + cusps, cusps

    def check_margin(self, box, pts):
        vx, vy, vw, vh = box
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        self.assertGreaterEqual(min(xs) - vx, 0.05 * (max(xs) - min(xs)))
        self.assertGreaterEqual(vx + vw - max(xs), 0.05 * (max(xs) - min(xs)))
        self.assertGreaterEqual(min(ys) - vy, 0.05 * (max(ys) - min(ys)))
        self.assertGreaterEqual(vy + vh - max(ys), 0.05 * (max(ys) - min(ys)))

    def test_curves_case1(self):
        path = os.path.join(SCRATCH, "case1.svg")
        code, doc, _ = run_json("curves", "--a", "2", "--b", "1", "--r", "0.3", "--out", path)
        self.assertEqual(code, 0)
        self.valid(doc)
        root, box, pts, cusps = self.svg_points(path)
        self.check_margin(box, pts)
        self.assertEqual(cusps, [])
        inner = [el for el in root.iter(SVG_NS + "polygon") if el.get("class") == "inner"]
        self.assertEqual(len(inner), 1)
        # A smooth convex inner offset: consecutive edge turns all have one sign.
        poly = [tuple(map(float, p.split(","))) for p in inner[0].get("points").split()]
        n = len(poly)
        turns = []
        for i in range(n):
            (x0, y0), (x1, y1), (x2, y2) = poly[i - 1], poly[i], poly[(i + 1) % n]
            turns.append((x1 - x0) * (y2 - y1) - (y1 - y0) * (x2 - x1))
        self.assertTrue(all(t > 0 for t in turns) or all(t < 0 for t in turns))

    def test_curves_case3_cusps(self):
        path = os.path.join(SCRATCH, "case3.svg")
        code, doc, _ = run_json("curves", "--a", "2", "--b", "1", "--r", "1.5", "--n", "400", "--out", path)
        self.assertEqual(code, 0)
        self.valid(doc)
        root, box, pts, cusps = self.svg_points(path)
        self.check_margin(box, pts)
        self.assertEqual(len(cusps), 4)
        lam = 0.5 * math.acos((2 * (4 / 1.5) ** (2 / 3) - 5) / 3)
        a2, b2, r = 4.0, 1.0, 1.5
        p = math.sqrt(a2 * math.cos(lam) ** 2 + b2 * math.sin(lam) ** 2)
        expected = ((a2 / p - r) * math.cos(lam), -(b2 / p - r) * math.sin(lam))
        self.assertTrue(any(math.dist(c, expected) < 1e-7 for c in cusps))

    def test_curves_case2_loops(self):
        path = os.path.join(SCRATCH, "case2.svg")
        code, _, _ = run_json("curves", "--a", "2", "--b", "1", "--r", "0.8", "--out", path)
        self.assertEqual(code, 0)
        root, box, pts, _ = self.svg_points(path)
        self.check_margin(box, pts)
        loops = [el for el in root.iter(SVG_NS + "polygon") if el.get("class") == "inner-loop"]
        self.assertEqual(len(loops), 3)

    def test_curves_deterministic(self):
        a = os.path.join(SCRATCH, "d1.svg")
        b = os.path.join(SCRATCH, "d2.svg")
        run("curves", "--a", "3", "--b", "1", "--r", "2", "--out", a)
        run("curves", "--a", "3", "--b", "1", "--r", "2", "--out", b)
        with open(a, "rb") as fa, open(b, "rb") as fb:
            self.assertEqual(fa.read(), fb.read())


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
