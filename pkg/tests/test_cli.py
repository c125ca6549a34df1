import json
import subprocess
import sys


def run_cli(args, inp=None, env_extra=None):
    import os
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([sys.executable, "-m", "afflat"] + args,
                          capture_output=True, text=True, input=inp, env=env)
    return proc


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_equiv_segment_example(tmp_path):
    a = write(tmp_path, "a.json", {"a": ["0"], "b": ["1"]})
    b = write(tmp_path, "b.json", {"a": ["3"], "b": ["4"]})
    proc = run_cli(["equiv", "--kind", "segment", a, b])
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {
        "equivalent": True, "map": {"matrix": [[1]], "translation": [3]}}


def test_invariant_affine_example(tmp_path):
    f = write(tmp_path, "f.json", {"points": [["2/5", "0"], ["0", "2/5"]]})
    proc = run_cli(["invariant", "--kind", "affine", f])
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"dim": 1, "d": 5, "c": 2}


def test_classify_conic_exit_codes(tmp_path):
    no_pt = write(tmp_path, "c.json",
                  {"a": "1", "b": "0", "c": "1", "d": "0", "e": "0", "f": "-3"})
    proc = run_cli(["classify-conic", no_pt])
    assert proc.returncode == 3
    assert json.loads(proc.stdout) == {"class": "ellipse-no-rational-point"}
    circ = write(tmp_path, "circ.json",
                 {"a": "1", "b": "0", "c": "1", "d": "0", "e": "0", "f": "-1"})
    proc = run_cli(["classify-conic", circ])
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"class": "ellipse-in-E"}


def test_hj_and_lambda1(tmp_path):
    s = write(tmp_path, "s.json", {"a": ["-1/2"], "b": ["5/8"]})
    proc = run_cli(["hj", s])
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {
        "vertices": [["-1/2"], ["0"], ["1/2"], ["3/5"], ["5/8"]]}
    proc = run_cli(["lambda1", s])
    assert json.loads(proc.stdout) == {"lambda1": "9/8"}


def test_desingularize(tmp_path):
    c = write(tmp_path, "cone.json", {"generators": [[-1, 2], [5, 8]]})
    proc = run_cli(["desingularize", c])
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["rays"] == [[-1, 2], [0, 1], [1, 2], [3, 5], [5, 8]]


def test_malformed_input_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    proc = run_cli(["hj", str(bad)])
    assert proc.returncode == 2
    assert "error" in json.loads(proc.stdout)
    missing = write(tmp_path, "m.json", {"a": ["0"]})
    proc = run_cli(["hj", missing])
    assert proc.returncode == 2


def test_not_in_class_exit_3(tmp_path):
    angle = write(tmp_path, "tri.json",
                  {"v": ["0", "0"], "h": ["1", "0"], "k": ["-1", "0"]})
    proc = run_cli(["invariant", "--kind", "angle", angle])
    assert proc.returncode == 3
    degenerate = write(tmp_path, "deg.json",
                       {"u": ["0", "0"], "v": ["1", "1"], "w": ["2", "2"]})
    proc = run_cli(["invariant", "--kind", "triangle", degenerate])
    assert proc.returncode == 3


def test_budget_exit_5(tmp_path):
    f = write(tmp_path, "f.json", {"points": [["1/97", "0"], ["0", "1/97"]]})
    proc = run_cli(["invariant", "--kind", "affine", f],
                   env_extra={"AFFLAT_MAX_DEN": "8"})
    assert proc.returncode == 5
    assert "error" in json.loads(proc.stdout)


def test_stdin_input():
    proc = run_cli(["lambda1", "-"], inp=json.dumps({"a": ["0"], "b": ["2/5"]}))
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"lambda1": "2/5"}


def test_witness_map_roundtrip(tmp_path):
    # the emitted witness map, applied back, reproduces the target object
    a = write(tmp_path, "a.json", {"a": ["0", "0"], "b": ["1/2", "0"]})
    b = write(tmp_path, "b.json", {"a": ["1", "1"], "b": ["3/2", "1"]})
    proc = run_cli(["equiv", "--kind", "segment", a, b])
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["equivalent"] is True
    from afflat.core import UniAffMap
    from afflat.jsonio import parse_point
    g = UniAffMap(tuple(tuple(r) for r in out["map"]["matrix"]),
                  tuple(out["map"]["translation"]))
    src = json.load(open(a))
    dst = json.load(open(b))
    assert g(parse_point(src["a"])) == parse_point(dst["a"])
    assert g(parse_point(src["b"])) == parse_point(dst["b"])


def test_output_byte_stable(tmp_path):
    f = write(tmp_path, "f.json", {"points": [["1/2", "0"], ["0", "1/2"]]})
    out1 = run_cli(["invariant", "--kind", "affine", f]).stdout
    out2 = run_cli(["invariant", "--kind", "affine", f]).stdout
    assert out1 == out2


def test_text_format(tmp_path):
    s = write(tmp_path, "s.json", {"a": ["-1/2"], "b": ["5/8"]})
    proc = run_cli(["--format", "text", "lambda1", s])
    assert proc.returncode == 0
    assert "9⁄8" in proc.stdout


def test_equiv_ambient_mismatch_exit_2(tmp_path):
    a = write(tmp_path, "a1d.json", {"a": ["0"], "b": ["1"]})
    b = write(tmp_path, "b2d.json", {"a": ["0", "0"], "b": ["1", "0"]})
    proc = run_cli(["equiv", "--kind", "segment", a, b])
    assert proc.returncode == 2


def test_equiv_polyhedron(tmp_path):
    p = write(tmp_path, "p.json",
              {"simplexes": [[["0"], ["1"]], [["2"], ["3"]]]})
    q = write(tmp_path, "q.json",
              {"simplexes": [[["5"], ["6"]], [["7"], ["8"]]]})
    proc = run_cli(["equiv", "--kind", "polyhedron", p, q])
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["equivalent"] is True
    from afflat.core import UniAffMap
    from afflat.jsonio import parse_polyhedron
    from afflat.polyhedra import poly_set_equal
    g = UniAffMap(tuple(tuple(r) for r in out["map"]["matrix"]),
                  tuple(out["map"]["translation"]))
    P = parse_polyhedron(json.load(open(p)))
    Q = parse_polyhedron(json.load(open(q)))
    assert poly_set_equal([tuple(g(v) for v in s) for s in P], Q)
    r = write(tmp_path, "r.json", {"simplexes": [[["0"], ["2"]]]})
    p2 = write(tmp_path, "p2.json", {"simplexes": [[["0"], ["1"]]]})
    proc = run_cli(["equiv", "--kind", "polyhedron", p2, r])
    assert json.loads(proc.stdout) == {"equivalent": False, "map": None}


def test_remaining_kinds(tmp_path):
    f1 = write(tmp_path, "f1.json", {"points": [["1/2", "0"], ["1/2", "1"]]})
    f2 = write(tmp_path, "f2.json", {"points": [["1/2", "0"], ["0", "1/2"]]})
    proc = run_cli(["equiv", "--kind", "affine", f1, f2])
    assert proc.returncode == 0 and json.loads(proc.stdout)["equivalent"] is True

    s = write(tmp_path, "seg.json", {"a": ["0"], "b": ["1/2"]})
    proc = run_cli(["invariant", "--kind", "segment", s])
    assert json.loads(proc.stdout) == {"c": 1, "lambda1": "1/2",
                                       "den_a": 1, "den_x1": 2}

    ang = write(tmp_path, "ang.json",
                {"v": ["0", "0"], "h": ["1", "0"], "k": ["0", "1"]})
    proc = run_cli(["invariant", "--kind", "angle", ang])
    assert json.loads(proc.stdout) == {"den_v": 1, "den_qh": 1, "den_phk": 1,
                                       "bary": ["0", "0"], "c": 1}

    t = write(tmp_path, "t.json",
              {"u": ["1", "0"], "v": ["0", "0"], "w": ["0", "1"]})
    proc = run_cli(["invariant", "--kind", "triangle", t])
    out = json.loads(proc.stdout)
    assert out["side_vu"] == {"c": 1, "lambda1": "1", "den_a": 1, "den_x1": 1}
    t2 = write(tmp_path, "t2.json",
               {"u": ["6", "7"], "v": ["5", "7"], "w": ["5", "8"]})
    proc = run_cli(["equiv", "--kind", "triangle", t, t2])
    assert json.loads(proc.stdout)["equivalent"] is True

    circ = write(tmp_path, "circ2.json",
                 {"a": "1", "b": "0", "c": "1", "d": "0", "e": "0", "f": "-1"})
    proc = run_cli(["invariant", "--kind", "ellipse", circ])
    out = json.loads(proc.stdout)
    assert len(out["triangles"]) >= 1

    a1 = write(tmp_path, "a1.json",
               {"v": ["0", "0"], "h": ["1", "0"], "k": ["0", "1"]})
    a2 = write(tmp_path, "a2.json",
               {"v": ["3", "3"], "h": ["4", "3"], "k": ["3", "4"]})
    proc = run_cli(["equiv", "--kind", "angle", a1, a2])
    assert json.loads(proc.stdout)["equivalent"] is True


def test_equiv_ellipse(tmp_path):
    c1 = write(tmp_path, "c1.json",
               {"a": "1", "b": "0", "c": "1", "d": "0", "e": "0", "f": "-1"})
    c2 = write(tmp_path, "c2.json",
               {"a": "1", "b": "-2", "c": "2", "d": "0", "e": "0", "f": "-1"})
    proc = run_cli(["equiv", "--kind", "ellipse", c1, c2])
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["equivalent"] is True
