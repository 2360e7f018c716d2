"""Document round trips and exit codes for the command line front end."""

import json
import subprocess
import sys

import pytest

from groupoids import cli
from groupoids.action import classical_to_relational
from groupoids.builders import cyclic_table, group_groupoid
from groupoids.morphism import left_regular
from groupoids.relation import Universe


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def groupoid_doc(tmp_path, g, name="g.json"):
    return write(tmp_path, name, cli.serialize(cli.payload_of_groupoid(g)))


@pytest.fixture()
def z2_path(tmp_path):
    return groupoid_doc(tmp_path, group_groupoid(cyclic_table(2)))


def test_groupoid_documents_round_trip_bytes(catalog, tmp_path):
    for key, g in catalog.items():
        text = cli.serialize(cli.payload_of_groupoid(g))
        loaded = cli.groupoid_from_payload(json.loads(text), text)
        again = cli.serialize(cli.payload_of_groupoid(loaded))
        assert again == text, key


def test_morphism_document_round_trip(tmp_path):
    h = left_regular(group_groupoid(cyclic_table(2)))
    text = cli.serialize(cli.payload_of_morphism(h, "l"))
    payload = json.loads(text)
    loaded, name = cli.morphism_from_payload(payload, text, str(tmp_path))
    assert cli.serialize(cli.payload_of_morphism(loaded, name)) == text


def test_action_document_round_trip(tmp_path):
    z2 = group_groupoid(cyclic_table(2))
    pq = Universe("PQ", ("p", "q"))
    swap = {("0", "p"): "p", ("0", "q"): "q", ("1", "p"): "q", ("1", "q"): "p"}
    action = classical_to_relational(z2, pq, {x: "0" for x in pq}, swap)
    text = cli.serialize(cli.payload_of_action(action, "swap"))
    payload = json.loads(text)
    loaded, name = cli.action_from_payload(payload, text, str(tmp_path))
    assert cli.serialize(cli.payload_of_action(loaded, name)) == text


def test_build_exit_codes(capsys, tmp_path):
    out_path = str(tmp_path / "z2.json")
    code, out, _ = run(capsys, ["build", "group", "cyclic:2", "--output", out_path])
    assert code == 0 and out == ""
    code, _, err = run(capsys, ["build", "equiv", "--block", "1,2", "--block", "2"])
    assert code == 1
    code, _, err = run(capsys, ["build", "group", "nosuch:3"])
    assert code == 2 and "nosuch" in err


def test_build_output_is_canonical(capsys, tmp_path):
    out_path = str(tmp_path / "z2.json")
    run(capsys, ["build", "group", "cyclic:2", "--output", out_path])
    text = open(out_path, encoding="utf-8").read()
    expected = cli.serialize(cli.payload_of_groupoid(group_groupoid(cyclic_table(2))))
    assert text == expected


def test_validate_exit_codes(capsys, tmp_path, z2_path):
    code, out, _ = run(capsys, ["validate", z2_path])
    assert code == 0
    assert out == "valid: 2 elements, 1 unit, 1 orbit\n"

    payload = json.loads(open(z2_path, encoding="utf-8").read())
    payload["compose"] = payload["compose"][1:]
    broken = write(tmp_path, "broken.json", cli.serialize(payload))
    code, out, _ = run(capsys, ["validate", broken])
    assert code == 1 and out.startswith("invalid:")

    mangled = write(tmp_path, "mangled.json", "{\n  \"kind\": \"groupoid\",\n")
    code, _, err = run(capsys, ["validate", mangled])
    assert code == 2 and "parse error" in err


def test_parse_errors_carry_line_numbers(capsys, tmp_path):
    bad_json = write(tmp_path, "bad.json", '{\n  "kind": "groupoid",\n  !\n}\n')
    code, _, err = run(capsys, ["validate", bad_json])
    assert code == 2 and "line 3" in err

    payload = cli.payload_of_groupoid(group_groupoid(cyclic_table(2)))
    payload["units"] = ["7"]
    text = cli.serialize(payload)
    doc = write(tmp_path, "badunit.json", text)
    code, _, err = run(capsys, ["validate", doc])
    line = next(
        i for i, l in enumerate(text.splitlines(), 1) if l.endswith('"7"')
    )
    assert code == 2 and f"line {line}" in err


def test_info_exit_codes(capsys, tmp_path, z2_path):
    code, out, _ = run(capsys, ["info", z2_path])
    assert code == 0
    assert "elements: 2" in out and "transitive: yes" in out

    payload = json.loads(open(z2_path, encoding="utf-8").read())
    payload["inverse"]["1"] = "0"
    broken = write(tmp_path, "badinv.json", cli.serialize(payload))
    code, _, err = run(capsys, ["info", broken])
    assert code == 1

    code, _, err = run(capsys, ["info", str(tmp_path / "missing.json")])
    assert code == 2


def test_restrict_exit_codes(capsys, tmp_path, catalog):
    p3 = groupoid_doc(tmp_path, catalog["P3"])
    code, out, _ = run(capsys, ["restrict", p3, "1,1", "2,2"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["elements"]) == 4

    code, _, _ = run(capsys, ["restrict", p3, "1,2"])
    assert code == 1
    code, _, _ = run(capsys, ["restrict", str(tmp_path / "none.json"), "1,1"])
    assert code == 2


def test_union_and_product_exit_codes(capsys, tmp_path, z2_path):
    code, out, _ = run(capsys, ["union", z2_path, z2_path])
    assert code == 0
    assert len(json.loads(out)["elements"]) == 4

    code, out, _ = run(capsys, ["product", z2_path, z2_path])
    assert code == 0
    assert len(json.loads(out)["elements"]) == 4

    payload = cli.payload_of_groupoid(group_groupoid(cyclic_table(2)))
    payload["inverse"]["1"] = "0"
    broken = write(tmp_path, "badinv.json", cli.serialize(payload))
    assert run(capsys, ["union", z2_path, broken])[0] == 1
    assert run(capsys, ["product", broken, z2_path])[0] == 1
    assert run(capsys, ["union", z2_path, str(tmp_path / "ghost.json")])[0] == 2
    assert run(capsys, ["product", z2_path, str(tmp_path / "ghost.json")])[0] == 2


def test_decompose_exit_codes(capsys, tmp_path, catalog):
    tr = groupoid_doc(tmp_path, catalog["TR"])
    code, out, _ = run(capsys, ["decompose", tr])
    assert code == 0 and "components: 1" in out

    payload = cli.payload_of_groupoid(catalog["Z2"])
    payload["compose"] = payload["compose"][1:]
    broken = write(tmp_path, "broken.json", cli.serialize(payload))
    assert run(capsys, ["decompose", broken])[0] == 1

    morphism_doc = write(
        tmp_path,
        "m.json",
        cli.serialize(
            cli.payload_of_morphism(
                left_regular(group_groupoid(cyclic_table(2))), "l"
            )
        ),
    )
    assert run(capsys, ["decompose", morphism_doc])[0] == 2


def test_morphism_exit_codes(capsys, tmp_path, z2_path):
    z2 = group_groupoid(cyclic_table(2))
    lr = write(
        tmp_path,
        "lr.json",
        cli.serialize(cli.payload_of_morphism(left_regular(z2), "l")),
    )
    trivial = write(
        tmp_path,
        "tr.json",
        cli.serialize(
            {
                "kind": "morphism",
                "name": "t",
                "source": "g.json",
                "target": "g.json",
                "graph": [["0", "0"], ["0", "1"]],
            }
        ),
    )

    assert run(capsys, ["morphism", "validate", lr])[0] == 0
    code, out, _ = run(capsys, ["morphism", "mono", lr])
    assert code == 0 and out.startswith("mono")
    code, out, _ = run(capsys, ["morphism", "mono", trivial])
    assert code == 1 and out.startswith("not mono: kernel 0 1")
    code, out, _ = run(capsys, ["morphism", "kernel", trivial])
    assert code == 0 and out == "0\n1\n"
    assert run(capsys, ["morphism", "surjective", trivial])[0] == 1
    assert run(capsys, ["morphism", "compose", trivial, lr])[0] == 1

    code, out, _ = run(capsys, ["morphism", "classify-into-group", trivial])
    assert code == 0 and "base unit: 0" in out

    bad = write(
        tmp_path,
        "badrow.json",
        cli.serialize(
            {
                "kind": "morphism",
                "name": "b",
                "source": "g.json",
                "target": "g.json",
                "graph": [["0"]],
            }
        ),
    )
    assert run(capsys, ["morphism", "validate", bad])[0] == 2


def test_morphism_compose_across_documents(capsys, tmp_path, z2_path):
    z2 = group_groupoid(cyclic_table(2))
    lr = write(
        tmp_path,
        "lr.json",
        cli.serialize(cli.payload_of_morphism(left_regular(z2), "l")),
    )
    ident = write(
        tmp_path,
        "id.json",
        cli.serialize(
            {
                "kind": "morphism",
                "name": "i",
                "source": "g.json",
                "target": "g.json",
                "graph": [["0", "0"], ["1", "1"]],
            }
        ),
    )
    code, out, _ = run(capsys, ["morphism", "compose", lr, ident])
    assert code == 0
    composite = json.loads(out)
    assert composite["graph"] == sorted(
        [d, g] for d, g in left_regular(z2).graph
    )


def test_bisections_exit_codes(capsys, tmp_path, catalog):
    p3 = groupoid_doc(tmp_path, catalog["P3"])
    code, out, _ = run(capsys, ["bisections", "list", p3])
    assert code == 0 and out.startswith("6 bisections\n")
    code, out, _ = run(capsys, ["bisections", "group", p3])
    assert code == 0 and out.startswith("order 6\n")
    assert run(capsys, ["bisections", "ad", p3, "1,2"])[0] == 1
    assert run(capsys, ["bisections", "list", str(tmp_path / "nope.json")])[0] == 2


def test_bisections_ad_document(capsys, tmp_path, z2_path):
    code, out, _ = run(capsys, ["bisections", "ad", z2_path, "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["graph"] == [["0", "0"], ["1", "1"]]


def test_action_exit_codes(capsys, tmp_path, catalog):
    z2 = catalog["Z2"]
    pq = Universe("PQ", ("p", "q"))
    swap = {("0", "p"): "p", ("0", "q"): "q", ("1", "p"): "q", ("1", "q"): "p"}
    action = classical_to_relational(z2, pq, {x: "0" for x in pq}, swap)
    act_doc = write(
        tmp_path, "swap.json", cli.serialize(cli.payload_of_action(action, "swap"))
    )
    code, out, _ = run(capsys, ["action", "validate", act_doc])
    assert code == 0 and out == "valid: action, 4 triples\n"

    payload = json.loads(open(act_doc, encoding="utf-8").read())
    payload["graph"] = payload["graph"][1:]
    broken = write(tmp_path, "badact.json", cli.serialize(payload))
    assert run(capsys, ["action", "validate", broken])[0] == 1

    payload = json.loads(open(act_doc, encoding="utf-8").read())
    payload["graph"][0] = ["p", "0"]
    shallow = write(tmp_path, "shortrow.json", cli.serialize(payload))
    assert run(capsys, ["action", "validate", shallow])[0] == 2


def test_action_document_pipeline(capsys, tmp_path, catalog):
    z4 = groupoid_doc(tmp_path, catalog["Z4"], "z4.json")
    code, out, _ = run(capsys, ["action", "quotient", z4, "0", "2"])
    assert code == 0
    assert len(json.loads(out)["elements"]) == 2
    assert run(capsys, ["action", "quotient", z4, "0", "1"])[0] == 1

    code, out, _ = run(capsys, ["action", "coset", z4, "0", "2"])
    assert code == 0
    assert len(json.loads(out)["carrier"]) == 2

    swap_doc = write(
        tmp_path,
        "m.json",
        cli.serialize(
            cli.payload_of_morphism(
                left_regular(group_groupoid(cyclic_table(2))), "l"
            )
        ),
    )
    code, out, _ = run(
        capsys, ["action", "from-morphism", swap_doc, "--carrier", "0", "1"]
    )
    assert code == 0
    roundtrip = json.loads(out)
    code, out, _ = run(
        capsys,
        [
            "action",
            "to-morphism",
            write(tmp_path, "back.json", cli.serialize(roundtrip)),
        ],
    )
    assert code == 0
    assert json.loads(out)["graph"] == sorted(
        [d, g] for d, g in left_regular(group_groupoid(cyclic_table(2))).graph
    )


def test_enum_exit_codes(capsys, tmp_path, z2_path, catalog):
    code, out, _ = run(capsys, ["enum", "morphisms", z2_path, z2_path])
    assert code == 0 and out.startswith("2 morphisms\n")
    code, out, _ = run(
        capsys, ["enum", "morphisms", z2_path, z2_path, "--naive"]
    )
    assert code == 0 and out.startswith("2 morphisms\n")

    p3 = groupoid_doc(tmp_path, catalog["P3"], "p3.json")
    code, _, err = run(capsys, ["enum", "morphisms", p3, p3, "--naive"])
    assert code == 1 and "cap" in err

    assert run(capsys, ["enum", "morphisms", z2_path, str(tmp_path / "x.json")])[0] == 2

    code, out, _ = run(
        capsys, ["enum", "actions", z2_path, "--carrier", "x", "y"]
    )
    assert code == 0 and out.startswith("2 actions\n")
    code, out, _ = run(
        capsys, ["enum", "actions", z2_path, "--carrier", "x", "y", "--direct"]
    )
    assert code == 0 and out.startswith("2 actions\n")

    code, out, _ = run(capsys, ["enum", "bisections", z2_path])
    assert code == 0 and out.startswith("2 bisections\n")


def test_stdin_documents(capsys, monkeypatch, z2_path):
    import io

    text = open(z2_path, encoding="utf-8").read()
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code, out, _ = run(capsys, ["validate", "-"])
    assert code == 0 and out.startswith("valid")


def test_console_script(tmp_path):
    out_path = str(tmp_path / "z2.json")
    proc = subprocess.run(
        ["groupoids", "build", "group", "cyclic:2", "--output", out_path],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    proc = subprocess.run(
        ["groupoids", "validate", out_path], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "valid: 2 elements, 1 unit, 1 orbit\n"
    proc = subprocess.run(
        ["groupoids", "validate", "-"],
        capture_output=True,
        text=True,
        input=open(out_path, encoding="utf-8").read(),
    )
    assert proc.returncode == 0
