import json
from fractions import Fraction
from pathlib import Path

import pytest

from charkit import cli, fileio
from charkit.corpus import (
    random_complex_function,
    random_rational_function,
    rng_for,
    staircase_function,
)
from charkit.errors import DataFormatError
from charkit.fourier import GridFunction, Spectrum, forward
from charkit.geometry import Ambient
from charkit.multiscale import RingAmbient
from charkit.scalars import Cyclotomic
from charkit.wavelets import decompose, mass_table

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*argv):
    return cli.main(list(argv))


def test_rational_formatting():
    assert fileio.format_rational(Fraction(3, 4)) == "3/4"
    assert fileio.format_rational(Fraction(-2)) == "-2"
    assert fileio.parse_rational("-7/2") == Fraction(-7, 2)
    with pytest.raises(DataFormatError):
        fileio.parse_rational("1/0")
    with pytest.raises(DataFormatError):
        fileio.parse_rational("x")


def test_function_payload_round_trip(tmp_path):
    rng = rng_for(800, "io")
    for amb in (Ambient(3, 2), Ambient(5, 1), RingAmbient(2, 2, 2)):
        f = random_rational_function(amb, rng)
        path = tmp_path / "f.json"
        fileio.save_function(f, path)
        assert fileio.load_function(path) == f
    g = random_complex_function(Ambient(3, 2), rng)
    path = tmp_path / "g.json"
    fileio.save_function(g, path)
    assert fileio.load_function(path).isclose(g)


def test_spectrum_payload_round_trip(tmp_path):
    F = forward(staircase_function(3))
    path = tmp_path / "spec.json"
    fileio.save_function(F, path)
    back = fileio.load_function(path, spectrum=True)
    assert isinstance(back, Spectrum)
    assert back.values == F.values


def test_payload_schema_errors():
    with pytest.raises(DataFormatError) as err:
        fileio.function_from_payload({"p": 3, "values": []})
    assert "d" in str(err.value) and "kind" in str(err.value)
    with pytest.raises(DataFormatError):
        fileio.function_from_payload({"p": 3, "d": 2, "kind": "rational", "values": ["1"]})
    with pytest.raises(DataFormatError):
        fileio.function_from_payload(
            {"p": 3, "d": 1, "kind": "rational", "values": ["1", "?", "0"]}
        )
    with pytest.raises(DataFormatError):
        fileio.function_from_payload(
            {"p": 3, "d": 1, "kind": "cyclotomic", "values": [{"p": 5, "coeffs": ["1"] * 4}] * 3}
        )


def test_sinogram_round_trip_and_rebasing(tmp_path):
    f = staircase_function(3)
    table = mass_table(f)
    path = tmp_path / "sino.json"
    fileio.save_sinogram(table, path)
    again = fileio.load_sinogram(path)
    assert again.rows == table.rows
    # a non-canonical direction is rebased onto its canonical generator
    payload = fileio.sinogram_to_payload(table)
    row = payload["masses"][1]  # direction (1,0)
    assert row["s"] == [1, 0]
    row["s"] = [2, 0]  # same line, generator doubled
    row["m"] = [row["m"][t * 2 % 3] for t in range(3)]  # masses seen by s=(2,0)
    rebased = fileio.sinogram_from_payload(payload)
    assert rebased.rows == table.rows
    # duplicate directions rejected
    payload["masses"].append(payload["masses"][0])
    with pytest.raises(DataFormatError):
        fileio.sinogram_from_payload(payload)


def test_decomposition_payload_round_trip():
    dec = decompose(staircase_function(3), "reduced")
    payload = fileio.decomposition_to_payload(dec)
    again = fileio.decomposition_from_payload(payload)
    assert again == dec
    assert again.evaluate() == staircase_function(3)


def test_cyclotomic_scalar_payload():
    z = Cyclotomic(3, [Fraction(1, 2), Fraction(-1)])
    payload = fileio.scalar_to_payload(z)
    assert payload == {"p": 3, "coeffs": ["1/2", "-1"]}
    assert fileio.scalar_from_payload(payload, "cyclotomic", 3) == z
    z4 = Cyclotomic.zeta(2, 1, ell=2)
    payload4 = fileio.scalar_to_payload(z4)
    assert payload4["ell"] == 2
    assert fileio.scalar_from_payload(payload4, "cyclotomic", 2, 2) == z4


def test_cli_transform_round_trip(tmp_path, capsys):
    fn = tmp_path / "fn.json"
    spec = tmp_path / "spec.json"
    back = tmp_path / "back.json"
    fileio.save_function(staircase_function(3), fn)
    assert run_cli("transform", "--input", str(fn), "--output", str(spec)) == 0
    assert run_cli("transform", "--inverse", "--input", str(spec), "--output", str(back)) == 0
    assert fn.read_bytes() == back.read_bytes()


def test_cli_transform_oracle(tmp_path, capsys):
    rng = rng_for(801, "cli-oracle")
    for i in range(10):
        f = random_rational_function(Ambient((2, 3, 5)[i % 3], 2), rng)
        fn = tmp_path / f"fn{i}.json"
        fileio.save_function(f, fn)
        assert run_cli("transform", "--input", str(fn), "--oracle") == 0
        assert json.loads(capsys.readouterr().out)["match"] == "exact"


def test_cli_bandwidth_golden(tmp_path, capsys):
    for p in (3, 5, 7):
        fn = tmp_path / f"stair{p}.json"
        out = tmp_path / f"bw{p}.json"
        fileio.save_function(staircase_function(p), fn)
        assert run_cli("bandwidth", "--input", str(fn), "--output", str(out)) == 0
        assert out.read_bytes() == (GOLDEN / f"staircase_bandwidth_p{p}.json").read_bytes()


def test_cli_decompose_forms(tmp_path, capsys):
    fn = tmp_path / "fn.json"
    fileio.save_function(staircase_function(3), fn)
    for form in ("plain", "reduced", "massless"):
        assert run_cli("decompose", "--input", str(fn), "--form", form) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["form"] == form and len(payload["parts"]) == 3
    # constant input has no parts
    cfn = tmp_path / "const.json"
    fileio.save_function(GridFunction.constant(Ambient(3, 2), Fraction(2)), cfn)
    assert run_cli("decompose", "--input", str(cfn), "--form", "massless") == 0
    assert json.loads(capsys.readouterr().out)["parts"] == []


def test_cli_tomography_round_trip_and_corruption(tmp_path, capsys):
    fn = tmp_path / "fn.json"
    sino = tmp_path / "sino.json"
    back = tmp_path / "back.json"
    fileio.save_function(staircase_function(3), fn)
    assert run_cli("tomography", "project", "--input", str(fn), "--output", str(sino)) == 0
    assert run_cli("tomography", "reconstruct", "--input", str(sino), "--output", str(back)) == 0
    assert fn.read_bytes() == back.read_bytes()
    payload = json.loads(sino.read_text())
    payload["masses"][0]["m"][2] = "41"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(payload))
    assert run_cli("tomography", "reconstruct", "--input", str(bad)) == 2


def test_cli_eigen_variety_zpl(tmp_path, capsys):
    fn = tmp_path / "fn.json"
    fileio.save_function(staircase_function(3), fn)
    assert run_cli("eigen", "--input", str(fn)) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["expansion"]["reconstruction"] == "exact"
    assert run_cli("variety", "--input", str(fn)) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["good"] is False
    zfn = tmp_path / "zfn.json"
    rng = rng_for(802, "cli-zpl")
    fileio.save_function(random_rational_function(RingAmbient(2, 2, 2), rng), zfn)
    assert run_cli("zpl", "--input", str(zfn)) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["multiscale"]["reconstruction"] == "exact"


def test_cli_verify_exhaustive_flags(capsys):
    assert run_cli("verify", "uncertainty", "--p", "2", "--d", "2", "--exhaustive") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"]
    detail = payload["suites"][0]["checks"][0]["detail"]
    assert "15/15" in detail


def test_cli_transform_oracle_complex(tmp_path, capsys):
    f = random_complex_function(Ambient(3, 2), rng_for(803, "cli-cplx"))
    fn = tmp_path / "cfn.json"
    fileio.save_function(f, fn)
    assert run_cli("transform", "--input", str(fn), "--oracle") == 0
    assert json.loads(capsys.readouterr().out)["match"] == "within tolerance"


def test_cli_verify_table_format(capsys):
    assert run_cli("verify", "zpl", "--format", "table") == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS zpl:") and "multiscale" in out


def test_cli_verify_deterministic(capsys):
    assert run_cli("verify", "dichotomy", "--seed", "42") == 0
    first = capsys.readouterr().out
    assert run_cli("verify", "dichotomy", "--seed", "42") == 0
    assert capsys.readouterr().out == first


def test_cli_exit_codes(tmp_path, capsys):
    assert run_cli("bandwidth") == 1  # usage
    missing = tmp_path / "missing.json"
    assert run_cli("bandwidth", "--input", str(missing)) == 2  # data
    bad = tmp_path / "bad.json"
    bad.write_text("{\"p\": 3}")
    assert run_cli("bandwidth", "--input", str(bad)) == 2


def test_cli_table_format(tmp_path, capsys):
    fn = tmp_path / "fn.json"
    fileio.save_function(staircase_function(3), fn)
    assert run_cli("bandwidth", "--input", str(fn), "--format", "table") == 0
    out = capsys.readouterr().out
    assert "cbw: 3" in out
