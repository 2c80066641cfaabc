from pathlib import Path

import pytest
from streamlit.testing.v1 import AppTest

APP = "../src/app.py"


@pytest.fixture
def app():
    return AppTest.from_file(APP, default_timeout=60).run()


def test_renders_default_value(app):
    assert not app.exception
    assert set(app.code[0].value.split(" + ")) == {"x1", "x1^-1"}
    assert not app.error


def test_bad_partition_shows_error(app):
    app.sidebar.text_input[0].set_value("1,2").run()
    assert app.error
    assert "Error evaluating" in app.error[0].value


def test_run_suite(app):
    app.button[0].click().run()
    assert not app.exception
    metrics = {m.label: m.value for m in app.metric}
    assert metrics["Failed"] == "0"
    assert int(metrics["Checks"]) > 0


def test_dashboard_does_not_import_the_cli():
    source = (Path(__file__).parent / APP).read_text(encoding="utf-8")
    assert "cli_module" not in source
    assert "evaluator_module.evaluators" in source
