import pytest
from hypothesis import given, settings, HealthCheck, strategies as st

from rmi.models import ModelParams, custom_model, er_model, get_data, model_from_params, sample
from rmi.monomials import MonomialSet
from rmi.store import SampleFormatError, read_sample, write_sample


def test_write_creates_two_files(tmp_path):
    s = sample(er_model(3, 3, 0.2), 5, 1)
    out = write_sample(s, tmp_path / "s")
    assert sorted(p.name for p in out.iterdir()) == ["data.txt", "model.txt"]
    lines = (out / "data.txt").read_text().splitlines()
    assert len(lines) == 5


def test_model_file_layout(tmp_path):
    s = sample(er_model(4, 3, (0.1, 0.0, 0.2), output="ideals"), 3, 42)
    write_sample(s, tmp_path / "s")
    assert (tmp_path / "s" / "model.txt").read_text() == (
        "format_version: 1\n"
        "name: Erdos-Renyi\n"
        "kind: builtin\n"
        "n: 4\n"
        "D: 3\n"
        "spec_kind: p-list\n"
        "spec_values: 0.1,0.0,0.2\n"
        "strategy: plain\n"
        "output: ideals\n"
        "seed: 42\n"
        "sample_size: 3\n"
    )


def test_no_overwrite(tmp_path):
    s = sample(er_model(2, 2, 0.5), 2, 1)
    write_sample(s, tmp_path / "s")
    with pytest.raises(FileExistsError):
        write_sample(s, tmp_path / "s")


def test_roundtrip_and_get_data(tmp_path):
    s = sample(er_model(3, 4, 0.3, output="ideals"), 20, 7)
    write_sample(s, tmp_path / "s")
    back = read_sample(tmp_path / "s")
    assert back == s
    assert get_data(back) == get_data(s)


def test_tampered_line_reports_position(tmp_path):
    s = sample(er_model(3, 2, 0.5), 4, 1)
    write_sample(s, tmp_path / "s")
    data = tmp_path / "s" / "data.txt"
    lines = data.read_text().splitlines()
    lines[2] = "x0"
    data.write_text("\n".join(lines) + "\n")
    with pytest.raises(SampleFormatError) as err:
        read_sample(tmp_path / "s")
    assert err.value.line == 3
    assert "data.txt" in str(err.value)


def test_missing_and_corrupt_model(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_sample(tmp_path / "nothing")
    s = sample(er_model(2, 2, 0.5), 2, 1)
    write_sample(s, tmp_path / "s")
    (tmp_path / "s" / "model.txt").write_text("format_version: 1\nname Erdos\n")
    with pytest.raises(SampleFormatError) as err:
        read_sample(tmp_path / "s")
    assert err.value.line == 2
    (tmp_path / "s" / "model.txt").unlink()
    with pytest.raises(SampleFormatError, match="model.txt"):
        read_sample(tmp_path / "s")


def test_wrong_draw_count(tmp_path):
    s = sample(er_model(2, 2, 0.5), 3, 1)
    write_sample(s, tmp_path / "s")
    data = tmp_path / "s" / "data.txt"
    data.write_text(data.read_text() + "x1\n")
    with pytest.raises(SampleFormatError):
        read_sample(tmp_path / "s")


def test_custom_model_name_with_spaces(tmp_path):
    name = "rand(D,n,M): fixed   singleton  "
    m = custom_model({"k": 2}, lambda params, seed: MonomialSet(2, ((0, 2),)), name)
    s = sample(m, 3, 5)
    write_sample(s, tmp_path / "s")
    back = read_sample(tmp_path / "s")
    assert back.model_name == name
    assert back.parameters == "{'k': 2}"
    assert back.data == s.data


def test_rewrite_is_bit_identical(tmp_path):
    s = sample(er_model(3, 3, M=(1, 2, 1)), 10, 3)
    write_sample(s, tmp_path / "a")
    write_sample(read_sample(tmp_path / "a"), tmp_path / "b")
    for name in ("model.txt", "data.txt"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


@st.composite
def builtin_params(draw):
    n = draw(st.integers(1, 4))
    D = draw(st.integers(1, 4))
    kind = draw(st.sampled_from(["p", "p-list", "M", "M-list", "minimal"]))
    output = draw(st.sampled_from(["sets", "ideals"]))
    prob = st.floats(0, 1, allow_nan=False)
    if kind == "p":
        return ModelParams(n, D, p=draw(prob), output=output)
    if kind == "p-list":
        return ModelParams(n, D, p=tuple(draw(st.lists(prob, min_size=D, max_size=D))), output=output)
    if kind == "minimal":
        return ModelParams(n, D, p=tuple(draw(st.lists(prob, min_size=D, max_size=D))),
                           strategy="minimal", output=output)
    if kind == "M":
        return ModelParams(n, D, M=draw(st.integers(0, 12)), output=output)
    return ModelParams(n, D, M=tuple(draw(st.lists(st.integers(0, 5), min_size=D, max_size=D))), output=output)


@settings(max_examples=60, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(builtin_params(), st.integers(1, 12), st.integers(0, 2**64 - 1))
def test_roundtrip_property(tmp_path_factory, params, N, seed):
    path = tmp_path_factory.mktemp("rt") / "s"
    s = sample(model_from_params(params), N, seed)
    write_sample(s, path)
    assert read_sample(path) == s
