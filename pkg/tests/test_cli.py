import json

from polytoric.cli import main


def write_input(tmp_path, payload, name="input.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_veronese_text(tmp_path, capsys):
    path = write_input(
        tmp_path, {"n": 5, "kind": "veronese", "s": [1, 1, 1, 1, 1], "d": 3}
    )
    code, out, _ = run(capsys, ["analyze", path])
    assert code == 0
    assert "gorenstein: yes (a = 2)" in out
    assert "class group: Z^5" in out


def test_analyze_box_json_round_trips(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 3, "kind": "box", "v": [2, 4, 6]})
    code, out, _ = run(capsys, ["analyze", path, "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["class_group"]["invariants"]["description"] == "Z^2 + Z/2Z"
    assert json.dumps(doc, sort_keys=True, indent=2) + "\n" == out


def test_analyze_rank_table_matches_reference(tmp_path, capsys):
    table = {"1": 1, "2": 1, "3": 1, "1,2": 2, "1,3": 2, "2,3": 2, "1,2,3": 2}
    path = write_input(tmp_path, {"n": 3, "kind": "rank_table", "table": table})
    code, out, _ = run(capsys, ["analyze", path, "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    # this table is the Veronese (1,1,1)/2 rank function
    assert doc["canonical_class"] == [2, 2, 2, 4]
    assert doc["gorenstein"] == {"is_gorenstein": True, "a": 2}


def test_analyze_random_table_matches_brute_force_reference(tmp_path, capsys):
    import random

    from polytoric import bitset
    from polytoric.abelian import quotient_by_relation
    from polytoric.sampling import random_rank_table

    rng = random.Random(424242)
    table = random_rank_table(4, rng)
    payload = {
        "n": 4,
        "kind": "rank_table",
        "table": {
            ",".join(str(i) for i in bitset.one_based(m)): r
            for m, r in table.items()
            if m
        },
    }
    path = write_input(tmp_path, payload)
    code, out, _ = run(capsys, ["analyze", path, "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    # reference: both definitions checked verbatim over all subsets
    expected = []
    for mask in bitset.nonempty_subsets(4):
        closed = all(
            table[mask | extra] > table[mask]
            for extra in bitset.submasks(bitset.full_mask(4) & ~mask)
            if extra
        )
        split = any(
            table[part] + table[mask ^ part] == table[mask]
            for part in bitset.submasks(mask)
            if part not in (0, mask)
        )
        if closed and not split:
            expected.append((sorted(bitset.one_based(mask)), table[mask]))
    got = [(m["set"], m["rank"]) for m in doc["family"]]
    assert sorted(got) == sorted(expected)
    ranks = [r for _, r in expected]
    inv = quotient_by_relation(len(ranks), ranks)
    assert doc["class_group"]["invariants"]["free_rank"] == inv.free_rank
    assert doc["class_group"]["invariants"]["torsion"] == inv.torsion


def test_analyze_is_deterministic(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 3, "kind": "veronese", "s": [1, 2, 2], "d": 3})
    _, first, _ = run(capsys, ["analyze", path, "--cone", "--format", "json"])
    _, second, _ = run(capsys, ["analyze", path, "--cone", "--format", "json"])
    assert first == second


def test_analyze_cone_cross_check(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 2, "kind": "box", "v": [1, 1]})
    code, out, _ = run(capsys, ["analyze", path, "--cone", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["cone"]["facets_match_family"] is True
    assert doc["cone"]["paths_agree"] is True
    assert doc["cone"]["facets"] == [[-1, 0, 1], [0, -1, 1], [0, 1, 0], [1, 0, 0]]


def test_analyze_normality_flag(tmp_path, capsys):
    path = write_input(
        tmp_path, {"n": 2, "kind": "multicomplex", "facets": [[2, 0], [0, 2]]}
    )
    code, out, _ = run(capsys, ["analyze", path, "--normality", "2", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["path"] == "cone"
    assert doc["cone"]["normality"]["violation"] == [1, 1, 1]
    assert any("normal" in w for w in doc["warnings"])


def test_analyze_multicomplex_cone_only(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 2, "kind": "multicomplex", "facets": [[1, 1]]})
    code, out, _ = run(capsys, ["analyze", path, "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["cone"]["class_group"]["relation"] == [1, 1]
    assert doc["cone"]["class_group"]["invariants"]["description"] == "Z"


def test_schema_violation_exit_2(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 2, "kind": "box", "v": [1]})
    code, _, err = run(capsys, ["analyze", path])
    assert code == 2
    assert 'at "v"' in err


def test_bad_table_key_exit_2(tmp_path, capsys):
    path = write_input(
        tmp_path, {"n": 2, "kind": "rank_table", "table": {"2,1": 1, "1": 1, "2": 1}}
    )
    code, _, err = run(capsys, ["analyze", path])
    assert code == 2
    assert "sorted" in err


def test_invalid_rank_table_exit_2(tmp_path, capsys):
    table = {"1": 1, "2": 1, "1,2": 3}  # submodularity fails
    path = write_input(tmp_path, {"n": 2, "kind": "rank_table", "table": table})
    code, _, err = run(capsys, ["verify", path])
    assert code == 2
    assert "submodularity" in err


def test_resource_cap_exit_3(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 3, "kind": "box", "v": [3, 3, 3]})
    code, _, err = run(capsys, ["facets", path, "--point-cap", "5"])
    assert code == 3
    assert "cap" in err


def test_max_n_cap_exit_3(tmp_path, capsys):
    path = write_input(
        tmp_path, {"n": 4, "kind": "veronese", "s": [1, 1, 1, 1], "d": 2}
    )
    code, _, err = run(capsys, ["analyze", path, "--max-n", "3"])
    assert code == 3


def test_facets_output(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 2, "kind": "box", "v": [1, 1]})
    code, out, _ = run(capsys, ["facets", path])
    assert code == 0
    assert out.splitlines() == ["-1 0 1", "0 -1 1", "0 1 0", "1 0 0"]


def test_facets_simplex(tmp_path, capsys):
    path = write_input(
        tmp_path, {"n": 2, "kind": "veronese", "s": [1, 1], "d": 1}
    )
    code, out, _ = run(capsys, ["facets", path])
    assert code == 0
    assert len(out.splitlines()) == 3


def test_verify_agreement(tmp_path, capsys):
    path = write_input(
        tmp_path,
        {"n": 3, "kind": "transversal", "sets": [[1], [1, 2, 3], [1, 2, 3]]},
    )
    code, out, _ = run(capsys, ["verify", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["checks"]["closed_form"] == "transversal:two-members-nested"
    assert doc["class_group"]["description"] == "Z"


def test_verify_each_named_family(tmp_path, capsys):
    inputs = [
        {"n": 3, "kind": "box", "v": [2, 2, 2]},
        {"n": 3, "kind": "veronese", "s": [1, 1, 1], "d": 2},
        {"n": 4, "kind": "transversal", "sets": [[1, 2], [1, 2], [3, 4], [3, 4]]},
        {"n": 3, "kind": "points", "points": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]},
    ]
    for k, payload in enumerate(inputs):
        path = write_input(tmp_path, payload, name=f"in{k}.json")
        code, out, _ = run(capsys, ["verify", path])
        assert code == 0, out
        assert json.loads(out)["ok"] is True


def test_analyze_matroid_runs_unmixedness_screen(tmp_path, capsys):
    # star-skeleton matroid: mixed skeleton, hence not Gorenstein
    payload = {"n": 4, "kind": "matroid_bases", "bases": [[1, 2], [1, 3], [1, 4]]}
    path = write_input(tmp_path, payload)
    code, out, _ = run(capsys, ["analyze", path, "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["gorenstein"]["skeleton_unmixed"] is False
    assert doc["gorenstein"]["is_gorenstein"] is False
    assert any("unmixed" in w for w in doc["warnings"])


def test_analyze_unmixed_matroid(tmp_path, capsys):
    payload = {
        "n": 4,
        "kind": "matroid_bases",
        "bases": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]],
    }
    path = write_input(tmp_path, payload)
    code, out, _ = run(capsys, ["analyze", path, "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["gorenstein"]["skeleton_unmixed"] is True


def test_verify_multicomplex_single_path(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 2, "kind": "multicomplex", "facets": [[2, 1]]})
    code, out, _ = run(capsys, ["verify", path])
    assert code == 0
    assert "single-path" in json.loads(out)["note"]


def test_unknown_kind_exit_2(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 2, "kind": "mystery"})
    code, _, err = run(capsys, ["analyze", path])
    assert code == 2
    assert 'at "kind"' in err


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, ["analyze", "/nonexistent/nowhere.json"])
    assert code == 2
