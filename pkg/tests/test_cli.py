import io
import json
import subprocess
import sys

import pytest

from ordgraph import (
    IntervalPartition,
    check_embedding,
    check_hom,
    gen_asymmetry_example,
    gen_complete,
    gen_crossing,
    gen_matching,
    gen_mplus,
    gen_mrl,
    parse,
    quotient,
    serialize,
)
from ordgraph.cli import run
from ordgraph.fileformat import from_json, write_graph
from ordgraph.matchings import MatchingEmbedding, classify_pair, parse_types


def invoke(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def invoke_json(*argv):
    status, out, _ = invoke(*argv, "--json")
    doc = json.loads(out)
    assert doc["schema"] == 1 and out.count("\n") == 1
    return status, doc


@pytest.fixture
def files(tmp_path):
    graphs = {
        "m2": gen_matching(2),
        "m3": gen_matching(3),
        "k2": gen_complete(2),
        "k3": gen_complete(3),
        "mplus2": gen_mplus(2),
        "mplus4": gen_mplus(4),
        "mrl3": gen_mrl(3),
        "asym": gen_asymmetry_example(),
        "cross2": gen_crossing(2),
    }
    paths = {}
    for name, g in graphs.items():
        p = tmp_path / f"{name}.txt"
        write_graph(g, str(p))
        paths[name] = str(p)
    return paths


class TestGolden:
    def test_chi_matching(self, files):
        assert invoke("chi", files["m3"]) == (
            0,
            "chi 4\nblocks 0 1 3 5\nordgraph 1\nkind undirected\nn 4\ne 0 1\ne 1 2\ne 2 3\n",
            "",
        )

    def test_chi_brute_matches(self, files):
        assert invoke("chi", files["m3"], "--method", "brute")[1].startswith("chi 4\n")

    def test_hom_none(self, files):
        assert invoke("hom", files["m2"], files["k2"]) == (0, "none\n", "")

    def test_hom_map(self, files):
        assert invoke("hom", files["m2"], files["k3"]) == (0, "map 0 1 1 2\n", "")

    def test_embed_induced(self, files):
        assert invoke("embed", files["mplus2"], files["mrl3"], "--induced") == (0, "emb 1 2 3 4\n", "")
        assert invoke("embed", files["k3"], files["m3"])[1] == "none\n"

    def test_oriented_asymmetry(self, files):
        left = invoke("oriented-chi", files["asym"], "--method", "greedy-left")[1]
        right = invoke("oriented-chi", files["asym"], "--method", "greedy-right")[1]
        exact = invoke("oriented-chi", files["asym"])[1]
        assert left.splitlines()[0] == "chi 4"
        assert right.splitlines()[0] == "chi 3"
        assert exact.splitlines()[0] == "chi 3"

    def test_duality(self):
        status, out, err = invoke("duality", "--k", "2", "--max-n", "5")
        assert status == 0 and err == ""
        assert out == "k 2\nmax-n 5\nchecked 1100\nviolations 0\n"

    def test_duality_progress_goes_to_stderr(self):
        status, out, err = invoke("duality", "--k", "1", "--max-n", "2", "--progress")
        assert out == "k 1\nmax-n 2\nchecked 4\nviolations 0\n"
        assert err == "n=0 checked=1\nn=1 checked=2\nn=2 checked=4\n"

    def test_matching_commands(self, files):
        assert invoke("matching", files["k3"])[1] == "match 0 1\n"
        assert invoke("nonintersecting", files["k3"])[1] == "match 0 1 1 2\n"

    def test_classify(self, files):
        assert invoke("classify", files["mplus2"])[1] == "pair 0 1 2 3 LR+RL\n"
        assert invoke("classify", files["m2"], "--pair", "0", "1", "2", "3")[1] == "pair 0 1 2 3 -\n"

    def test_uniform(self, files):
        assert invoke("uniform", "--types", "RL", "--n", "3")[1] == serialize(gen_mrl(3))
        assert invoke("uniform", files["mplus4"], "--size", "3")[1] == "types LR+RL\nmatch 0 1 2 3 4 5\n"

    def test_gen(self):
        assert invoke("gen", "--family", "crossing", "--n", "2")[1] == (
            "ordgraph 1\nkind oriented\nn 4\na 0 3\na 2 1\n"
        )
        assert parse(invoke("gen", "--family", "asym")[1]) == gen_asymmetry_example()

    def test_core(self, files):
        out = invoke("core", files["k3"])[1]
        assert out.startswith("core 3\nvertices 0 1 2\nmap 0 1 2\n")

    def test_enumerate(self):
        assert invoke("enumerate", "--n", "3", "--count")[1] == "count 8\n"
        assert invoke("enumerate", "--n", "3", "--kind", "oriented", "--count")[1] == "count 27\n"
        assert invoke("enumerate", "--n", "2", "--kind", "directed", "--count")[1] == "count 4\n"
        out = invoke("enumerate", "--n", "2")[1]
        assert [parse(block) for block in out.split("\n\n")] == [
            parse("n 2\n"),
            parse("n 2\ne 0 1\n"),
        ]

    def test_refute_pair(self, files):
        status, out, _ = invoke("refute-pair", files["k3"], files["k3"], "--max-n", "4")
        assert status == 1
        assert out.startswith("counterexample both-hold\n")
        status, out, _ = invoke("refute-pair", files["m2"], files["k2"], "--max-n", "4")
        assert (status, out) == (0, "confirmed 4\nchecked 76\n")

    def test_stdin(self, monkeypatch):
        status, out, _ = invoke("chi", "-", stdin="n 4\ne 0 1\ne 2 3\n", monkeypatch=monkeypatch)
        assert (status, out.splitlines()[0]) == (0, "chi 3")

    def test_byte_stable(self, files):
        runs = [invoke("oriented-chi", files["cross2"], "--json")[1] for _ in range(3)]
        assert len(set(runs)) == 1


class TestJson:
    def test_chi_revalidates(self, files):
        status, doc = invoke_json("chi", files["mplus2"])
        g = gen_mplus(2)
        p = IntervalPartition(g.vertex_count, tuple(doc["blocks"]))
        assert status == 0 and doc["command"] == "chi" and doc["chi"] == 4
        assert quotient(g, p) == from_json(doc["image"])

    def test_oriented_chi_revalidates(self, files):
        _, doc = invoke_json("oriented-chi", files["cross2"])
        g = gen_crossing(2)
        assert quotient(g, IntervalPartition(4, tuple(doc["blocks"]))) == from_json(doc["image"])
        assert doc["chi"] == 3 and doc["method"] == "exact"

    def test_hom_and_embed_revalidate(self, files):
        _, doc = invoke_json("hom", files["m2"], files["k3"])
        assert check_hom(gen_matching(2), gen_complete(3), doc["map"])
        _, doc = invoke_json("embed", files["mplus2"], files["mrl3"], "--induced")
        assert check_embedding(gen_mplus(2), gen_mrl(3), doc["embedding"], induced=True)
        _, doc = invoke_json("hom", files["m2"], files["k2"])
        assert doc["map"] is None

    def test_core_revalidates(self, files):
        _, doc = invoke_json("core", files["m2"])
        core = from_json(doc["core"])
        assert check_hom(gen_matching(2), core, doc["map"])
        assert gen_matching(2).induced(doc["vertices"]) == core

    def test_matching_revalidates(self, files):
        _, doc = invoke_json("matching", files["mplus4"])
        m = MatchingEmbedding([tuple(e) for e in doc["edges"]], strict=doc["strict"])
        assert m.is_in(gen_mplus(4)) and doc["count"] == 4

    def test_classify_and_uniform(self, files):
        _, doc = invoke_json("classify", files["mplus2"])
        row = doc["pairs"][0]
        assert classify_pair(gen_mplus(2), tuple(row["d1"]), tuple(row["d2"])) == parse_types(row["types"])
        _, doc = invoke_json("uniform", "--types", "LR+RL", "--n", "2")
        assert from_json(doc["graph"]) == gen_mplus(2)

    def test_duality(self):
        status, doc = invoke_json("duality", "--k", "2", "--max-n", "4")
        assert status == 0
        assert (doc["checked"], doc["violations"], doc["matching_mismatches"]) == (76, [], 0)

    def test_refute_pair(self, files):
        status, doc = invoke_json("refute-pair", files["k3"], files["k3"], "--max-n", "3")
        assert status == 1 and not doc["confirmed"]
        assert from_json(doc["counterexample"]) == gen_complete(3)

    def test_gen_and_enumerate(self):
        _, doc = invoke_json("gen", "--family", "om-d", "--n", "1")
        assert doc["graph"] == {"kind": "directed", "n": 2, "arcs": [], "doubles": [[0, 1]]}
        _, doc = invoke_json("enumerate", "--n", "3")
        assert doc["count"] == len(doc["graphs"]) == 8


class TestErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate"],
            ["chi"],
            ["chi", "/nonexistent/graph.txt"],
            ["duality", "--k", "x"],
            ["duality", "--k", "1", "--max-n", "9"],
            ["uniform", "--types", "QQ", "--n", "2"],
            ["uniform"],
            ["gen", "--family", "path"],
            ["enumerate", "--n", "7"],
        ],
    )
    def test_exit_two_with_one_line(self, argv):
        status, out, err = invoke(*argv)
        assert status == 2 and out == ""
        assert err.count("\n") == 1 and err.startswith("ordgraph:")

    def test_parse_error_reports_line(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("n 2\ne 0 5\n")
        status, _, err = invoke("chi", str(p))
        assert status == 2 and "line 2" in err

    def test_wrong_kind(self, files):
        assert invoke("hom", files["asym"], files["k2"])[0] == 2
        assert invoke("oriented-chi", files["k2"])[0] == 2

    def test_console_script(self, files):
        proc = subprocess.run(
            [sys.executable, "-m", "ordgraph", "chi", files["m3"]], capture_output=True, text=True, check=False
        )
        assert proc.returncode == 0 and proc.stdout.startswith("chi 4\n")
