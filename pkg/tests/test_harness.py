import json

import pytest

from mdimlab import complete_graph, cycle_graph, enumerate_small_trees, gn_graph, path_graph
from mdimlab.cli import main
from mdimlab.harness import (
    HOLDS,
    Instance,
    Report,
    SKIPPED,
    THEOREM_IDS,
    TheoremCheck,
    VIOLATED,
    default_corpus,
    explore,
    run_checks,
)


def _tree_instances(n_max):
    out = []
    for n in range(2, n_max + 1):
        for i, t in enumerate(enumerate_small_trees(n)):
            out.append(Instance(id=f"trees:n={n},i={i:03d}", graph=t, family="trees", param_n=n))
    return out


def test_tree_theorems_hold_from_three_vertices_up():
    instances = [inst for inst in _tree_instances(6) if inst.graph.n >= 3]
    report = run_checks(instances, theorems=["T4.2", "T4.3", "P4.5", "T4.1"])
    assert all(r.status == HOLDS for r in report.records)


def test_single_edge_tree_skips_middle_total_formulas():
    inst = Instance(id="trees:n=2,i=000", graph=path_graph(2), family="trees", param_n=2)
    report = run_checks([inst], theorems=["T4.2", "T4.3", "P4.5"])
    by_theorem = {r.theorem: r for r in report.records}
    assert by_theorem["T4.2"].status == SKIPPED
    assert by_theorem["T4.3"].status == SKIPPED
    assert by_theorem["P4.5"].status == HOLDS  # the bounds do hold on a single edge


def test_cactus_checks_on_cycles():
    instances = [Instance(id=f"cycle:n={n}", graph=cycle_graph(n)) for n in range(3, 7)]
    report = run_checks(instances, theorems=["T2.2-formula", "C3.5-cactus", "T3.1i"])
    assert all(r.status == HOLDS for r in report.records)


def test_non_cactus_skips_cactus_checks():
    inst = Instance(id="complete:n=4", graph=complete_graph(4))
    report = run_checks([inst], theorems=["T2.2-formula", "C3.5-cactus"])
    assert all(r.status == SKIPPED and r.reason.startswith("class") for r in report.records)


def test_gn_gap_check():
    g5 = Instance(id="gn:n=5", graph=gn_graph(5)[0], family="gn", param_n=5)
    g2 = Instance(id="gn:n=2", graph=gn_graph(2)[0], family="gn", param_n=2)
    other = Instance(id="cycle:n=5", graph=cycle_graph(5))
    report = run_checks([g5, g2, other], theorems=["P3.4"])
    by_instance = {r.instance: r for r in report.records}
    assert by_instance["gn:n=5"].status == HOLDS
    assert by_instance["gn:n=5"].values["gap"] >= 2
    assert by_instance["gn:n=2"].status == SKIPPED
    assert by_instance["cycle:n=5"].status == SKIPPED


def test_identity_and_forced_checks_hold():
    instances = [Instance(id="gn:n=2", graph=gn_graph(2)[0]),
                 Instance(id="cycle:n=5", graph=cycle_graph(5))]
    report = run_checks(instances, theorems=["E1-E6-identities", "L2.1-forced"])
    assert all(r.status == HOLDS for r in report.records)


def test_budget_skips_are_reported_not_raised():
    inst = Instance(id="cycle:n=8", graph=cycle_graph(8))
    report = run_checks([inst], theorems=["T3.1i"], budget=3)
    (record,) = report.records
    assert record.status == SKIPPED and record.reason.startswith("budget")
    assert report.exit_code(strict=False) == 0
    assert report.exit_code(strict=True) == 1


def test_phi_cap_skips():
    inst = Instance(id="cycle:n=6", graph=cycle_graph(6))
    report = run_checks([inst], theorems=["T3.1ii", "C3.2"], phi_cap=1)
    assert all(r.status == SKIPPED and r.reason.startswith("budget") for r in report.records)


def test_unknown_theorem_id_rejected():
    with pytest.raises(ValueError):
        run_checks([Instance(id="x", graph=path_graph(3))], theorems=["T9.9"])


def test_violated_records_force_nonzero_exit():
    record = TheoremCheck(theorem="T3.1i", instance="synthetic", status=VIOLATED,
                          values={}, n=2, edges=[[0, 1]])
    assert Report(source="synthetic", records=[record]).exit_code() == 1


def test_records_sorted_and_json_deterministic():
    instances = [Instance(id="cycle:n=4", graph=cycle_graph(4)),
                 Instance(id="cycle:n=3", graph=cycle_graph(3))]
    a = run_checks(instances, theorems=["T3.1i", "E1-E6-identities"])
    b = run_checks(instances, theorems=["T3.1i", "E1-E6-identities"])
    assert a.to_json() == b.to_json()
    keys = [(r.instance, r.theorem) for r in a.records]
    assert keys == sorted(keys)
    assert "elapsed_ms" not in a.to_json()
    assert "elapsed_ms" in a.to_json(timings=True)


def test_violated_and_full_instance_travel_in_json():
    record = TheoremCheck(theorem="T4.2", instance="synthetic", status=VIOLATED,
                          values={"n1": 2}, n=3, edges=[[0, 1], [1, 2]])
    payload = json.loads(Report(source="s", records=[record]).to_json())
    assert payload["records"][0]["edges"] == [[0, 1], [1, 2]]
    assert payload["summary"]["violated"] == 1


def test_csv_has_one_row_per_check():
    inst = Instance(id="path:n=4", graph=path_graph(4))
    report = run_checks([inst], theorems=["T3.1i", "T4.1"])
    lines = report.to_csv().strip().split("\n")
    assert lines[0].startswith("instance,theorem,status")
    assert len(lines) == 3


def test_explore_trees_all_equal():
    report = explore(_tree_instances(5), target="mdim_eq_mdims")
    assert all(r.values["gap"] == 0 for r in report.records)
    assert report.extra["max_gap_found"] == 0
    assert len(report.extra["equality_instances_found"]) == len(report.records)


def test_explore_two_hub_gap():
    inst = Instance(id="gn:n=5", graph=gn_graph(5)[0], family="gn", param_n=5)
    report = explore([inst], target="gap_gt_2")
    assert report.records[0].values["gap"] == 2
    assert report.extra["gap_gt_2_instances_found"] == []
    assert report.extra["scope"] == "scanned corpus only"


def test_explore_unknown_target():
    with pytest.raises(ValueError):
        explore([Instance(id="x", graph=path_graph(3))], target="everything")


def test_default_corpus_is_deterministic_and_diverse():
    a = default_corpus()
    b = default_corpus()
    assert [i.id for i in a] == [i.id for i in b]
    assert all(x.graph == y.graph for x, y in zip(a, b))
    families_present = {i.id.split(":")[0] for i in a}
    assert {"trees", "cycle", "complete", "gn", "random_tree", "random_cactus"} <= families_present


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def test_cli_generate_and_solve_round_trip(tmp_path, capsys):
    path = tmp_path / "g2.txt"
    assert main(["generate", "--family", "gn", "--n", "2", "--output", str(path)]) == 0
    assert main(["solve", "--input", str(path), "--kind", "mdim"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["certificate"]["value"] == 4
    assert payload["certificate"]["forced"] == [0, 1, 2, 3]


def test_cli_solve_on_subdivision(capsys):
    assert main(["solve", "--family", "gn", "--n", "2", "--kind", "mdim", "--derived", "s"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["certificate"]["value"] == 3


def test_cli_solve_reports_budget_errors_as_json(capsys):
    code = main(["solve", "--family", "cycle", "--n", "8", "--kind", "mdim",
                 "--budget", "2"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 1
    assert "error" in payload


def test_cli_transform_total_of_single_edge(capsys):
    assert main(["transform", "--family", "path", "--n", "2", "--derived", "t"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["graph"]["n"] == 3 and payload["graph"]["m"] == 3
    assert sorted(payload["edge_classes"]) == ["original", "sedge", "sedge"]


def test_cli_transform_line_graph(capsys):
    assert main(["transform", "--family", "path", "--n", "3", "--derived", "l"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["graph"]["n"] == 2 and payload["vertices"][0]["base_edge"] == [0, 1]


def test_cli_transform_dot(capsys):
    assert main(["transform", "--family", "gn", "--n", "5", "--derived", "s",
                 "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph s {") and "shape=box" in out


def test_cli_verify_selected_theorems(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--family", "cycle", "--n", "3..6",
                 "--theorems", "T2.2-formula,C3.5-cactus", "--output", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["summary"]["violated"] == 0
    assert payload["summary"]["holds"] == 8


def test_cli_verify_inline_family_spec(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--family", "random_cactus:n=10,cycles=2,seed=1..3",
                 "--theorems", "T2.2-formula", "--output", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert len(payload["records"]) == 3


def test_cli_verify_is_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--family", "trees", "--n", "2..5", "--output"]
    assert main(argv + [str(first)]) == 0
    assert main(argv + [str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_cli_verify_strict_budget(tmp_path):
    argv = ["verify", "--family", "cycle", "--n", "8", "--theorems", "T3.1i",
            "--budget", "3", "--output", str(tmp_path / "r.json")]
    assert main(argv) == 0
    assert main(argv + ["--strict"]) == 1


def test_cli_explore(capsys):
    code = main(["explore", "--target", "gap_gt_2", "--family", "gn", "--n", "5"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["findings"]["max_gap_found"] == 2
    assert payload["findings"]["gap_gt_2_instances_found"] == []


def test_cli_bad_file_is_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 3\n")
    assert main(["solve", "--input", str(bad), "--kind", "dim"]) == 2
    assert "mdimlab:" in capsys.readouterr().err


def test_cli_unknown_family_is_exit_2(capsys):
    assert main(["solve", "--family", "hypercube", "--n", "3", "--kind", "dim"]) == 2


def test_cli_family_without_n_is_exit_2(capsys):
    assert main(["solve", "--family", "path", "--kind", "dim"]) == 2


def test_cli_verify_csv(capsys):
    assert main(["verify", "--family", "cycle", "--n", "4",
                 "--theorems", "T3.1i", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("instance,theorem,status")


def test_cli_generate_formats(capsys):
    assert main(["generate", "--family", "star", "--n", "5", "--format", "graph6"]) == 0
    assert capsys.readouterr().out.strip() == "Ds_"  # center-0 star on 5 vertices
    assert main(["generate", "--family", "path", "--n", "3", "--format", "dot"]) == 0
    assert "v0 -- v1;" in capsys.readouterr().out
    assert main(["generate", "--family", "path", "--n", "3", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["graph"]["n"] == 3


def test_theorem_id_catalogue_is_stable():
    assert THEOREM_IDS == (
        "C3.2", "C3.5-cactus", "E1-E6-identities", "L2.1-forced", "P3.4",
        "P4.5", "T2.2-formula", "T3.1i", "T3.1ii", "T4.1", "T4.2", "T4.3",
    )
