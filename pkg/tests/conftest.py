import io
import json
from contextlib import redirect_stdout

import pytest

from gcdkit import build_tables
from gcdkit.cli import main


def pytest_addoption(parser):
    parser.addoption(
        "--extended",
        action="store_true",
        default=False,
        help="run the extended (slow) acceptance checks, e.g. the 50000-grid census",
    )


@pytest.fixture(scope="session")
def tables_1m():
    return build_tables(10**6)


@pytest.fixture(scope="session")
def tables_10k():
    return build_tables(10**4)


def run_cli(args):
    """Invoke the CLI in-process; returns (exit_code, stdout_text)."""
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(args)
    return code, buf.getvalue()


def cli_json(args):
    """Run the CLI and parse its JSON report; asserts exit code 0."""
    code, out = run_cli(args)
    assert code == 0, f"CLI failed ({code}) for {args}: {out!r}"
    return json.loads(out)


@pytest.fixture
def cli():
    return cli_json
