import math
import textwrap

import pytest

from muskat.config import ConfigReader, parse_config
from muskat.errors import ConfigError
from muskat.solver import InitialMode, SimConfig, WeightKind


def _parse(text):
    return parse_config(textwrap.dedent(text))


def test_empty_document_gives_defaults():
    document = parse_config("")
    assert document.sim == SimConfig()
    assert document.sweep is None


def test_full_document():
    document = _parse("""
        grid:
          L: 3.141592653589793
          N: 32
        cutoff_n: 6
        weight:
          kind: power-log
          a: 0.25
        time:
          dt: 0.01
          T: 0.1
        quad:
          alpha_nodes_per_decade: 16
        init:
          modes:
            - {k: 1, amplitude: 0.01}
            - {k: 2, amplitude: 0.005, phase: 0.5}
        output:
          cadence: 2
          keep_states: true
        seed: 3
        constants:
          C2: 2.0
    """)
    sim = document.sim
    assert sim.size == 32
    assert sim.half_length == pytest.approx(math.pi)
    assert sim.n == 6.0
    assert sim.weight_a == 0.25
    assert sim.step_count == 10
    assert sim.init_modes == (InitialMode(1.0, 0.01, 0.0), InitialMode(2.0, 0.005, 0.5))
    assert sim.cadence == 2 and sim.keep_states
    assert sim.constants.C2 == 2.0 and sim.constants.C1 == 1.0


def test_json_is_accepted():
    document = parse_config('{"grid": {"L": 3.14, "N": 64}, "seed": 1}')
    assert document.sim.size == 64
    assert document.sim.seed == 1


def test_exponent_strings_are_numbers():
    document = _parse("""
        grid: {L: 3.141592653589793, N: 32}
        time:
          dt: 1e-3
          T: 1e-2
    """)
    assert document.sim.time_step == pytest.approx(1e-3)


def test_invalid_grid_size_is_located():
    with pytest.raises(ConfigError) as excinfo:
        _parse("""
            grid:
              L: 3.0
              N: 100
        """)
    assert excinfo.value.field == "grid.N"
    assert excinfo.value.line == 4
    assert "grid.N (line 4)" in str(excinfo.value)


@pytest.mark.parametrize("text, field", [
    ("grid: {L: 3.0, M: 32}", "grid.M"),
    ("output: {cadance: 2}", "output.cadance"),
    ("extra: 1", "extra"),
    ("init:\n  modes:\n    - {k: 1, amplitude: 0.1, freq: 2}", "init.modes[0].freq"),
    ("init:\n  modes:\n    - {amplitude: 0.1}", "init.modes[0].k"),
])
def test_unknown_and_missing_keys_report_their_path(text, field):
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    assert excinfo.value.field == field


@pytest.mark.parametrize("text, field", [
    ("seed: true", "seed"),
    ("grid: {N: 32.5}", "grid.N"),
    ("time: {T: soon}", "time.T"),
    ("output: {keep_states: 1}", "output.keep_states"),
    ("weight: {kind: flat}", "weight.kind"),
    ("weight: {a: 2.0}", "weight.a"),
    ("time: {T: .nan}", "time.T"),
    ("constants: {C1: -1}", "constants"),
    ("grid: 5", "grid"),
])
def test_type_and_range_errors(text, field):
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    assert excinfo.value.field == field


def test_data_adapted_weight_needs_initial_data():
    with pytest.raises(ConfigError) as excinfo:
        parse_config("weight: {kind: data-adapted}")
    assert excinfo.value.field == "weight.kind"

    document = _parse("""
        weight: {kind: data-adapted}
        init:
          random: {amplitude: 0.1, max_mode: 4}
    """)
    assert document.sim.weight_kind is WeightKind.DATA_ADAPTED
    assert document.sim.init_random.max_mode == 4


def test_syntax_errors_carry_a_line():
    with pytest.raises(ConfigError) as excinfo:
        parse_config("grid:\n  L: [1, 2\n")
    assert excinfo.value.line is not None


def test_top_level_must_be_a_mapping():
    with pytest.raises(ConfigError):
        parse_config("- 1\n- 2\n")


def test_sweep_section():
    document = _parse("""
        grid: {L: 3.141592653589793, N: 32}
        sweep:
          amplitudes: [0.01, 0.02]
          cutoffs: [4, 8]
          dts: [0.05]
    """)
    assert len(document.sweep) == 4
    assert document.sweep.cutoffs == (4.0, 8.0)


def test_sweep_cutoffs_are_checked_against_the_grid():
    with pytest.raises(ConfigError) as excinfo:
        _parse("""
            grid: {L: 3.141592653589793, N: 32}
            sweep:
              amplitudes: [0.01]
              cutoffs: [4, 20]
              dts: [0.05]
        """)
    assert excinfo.value.field == "sweep.cutoffs[1]"


def test_incomplete_sweep_section():
    with pytest.raises(ConfigError) as excinfo:
        parse_config("sweep: {amplitudes: [0.1], dts: [0.1]}")
    assert excinfo.value.field == "sweep.cutoffs"


def test_reader_loads_files(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("grid: {L: 3.0, N: 16}\nseed: 4\n", encoding="utf-8")
    reader = ConfigReader(str(path))
    assert reader.get_sim_config().seed == 4
    assert reader.get_sweep_spec() is None
    assert reader.validate_config() == []


def test_reader_reports_problems(tmp_path):
    assert ConfigReader(str(tmp_path / "missing.yaml")).validate_config()
    path = tmp_path / "bad.yaml"
    path.write_text("grid: {N: 100}\n", encoding="utf-8")
    (message,) = ConfigReader(str(path)).validate_config()
    assert message.startswith("grid.N (line 1)")


def test_init_file_must_exist(tmp_path):
    missing = tmp_path / "f0.txt"
    with pytest.raises(ConfigError) as excinfo:
        parse_config(f"grid: {{L: 3.0, N: 16}}\ninit:\n  file: {str(missing)!r}\n")
    assert excinfo.value.field == "init.file"
    assert excinfo.value.line == 3

    missing.write_text("\n".join(["0.0"] * 16), encoding="utf-8")
    document = parse_config(f"grid: {{L: 3.0, N: 16}}\ninit:\n  file: {str(missing)!r}\n")
    assert document.sim.init_file == str(missing)


def test_init_file_sample_count_is_checked(tmp_path):
    path = tmp_path / "f0.txt"
    path.write_text("0.1 0.2 0.3\n", encoding="utf-8")
    with pytest.raises(ConfigError) as excinfo:
        parse_config(f"grid: {{L: 3.0, N: 16}}\ninit: {{file: {str(path)!r}}}\n")
    assert excinfo.value.field == "init.file"
    assert "expected 16" in str(excinfo.value)
