"""Acceptance suite: one test per acceptance criterion, each printing a
PASS line with its measured runtime (run with `pytest -s` to see them live).

All criteria drive gate_call and friends directly; nothing here depends on
the HTTP front or any generated client.
"""

import contextlib
import io
import itertools
import random
import re
import struct
import time
from pathlib import Path

import pytest
from scipy.optimize import linear_sum_assignment

from jobgate import marshal
from jobgate.bindgen import emit_client_stub, emit_header, parse_manifest
from jobgate.gate import BUFFER_TOO_SMALL, OK, STAGE_ORDER, UNKNOWN_JOB, call_staged
from jobgate.services import POLYROOTS_BASE, SWAP_BASE, VERSION_BASE, build_gate

ROOT = Path(__file__).resolve().parents[1]
REGISTERED_BASES = {SWAP_BASE, VERSION_BASE, POLYROOTS_BASE}

TRACE_RE = re.compile(r"-> in gate\.handle_jobs job=(-?[0-9]+) stage=(-?[0-9]+)\n")


@pytest.fixture
def gate():
    g = build_gate()
    g.gate_init()
    return g


@contextlib.contextmanager
def criterion(name, budget_seconds):
    started = time.perf_counter()
    yield
    elapsed = time.perf_counter() - started
    assert elapsed < budget_seconds, f"{name}: took {elapsed:.2f}s, budget {budget_seconds}s"
    print(f"PASS {name} ({elapsed:.2f}s < {budget_seconds}s)")


def test_swap_round_trip_at_gate_boundary(gate):
    with criterion("swap round trip at the gate boundary", 1.0):
        buffer = [104, 101, 108, 108, 111]
        for job in (0, 1, 2):
            assert gate.gate_call(job, 5, buffer) == OK
        assert buffer == [111, 108, 108, 101, 104]


# Independent transition oracle: marker states and the legal moves between
# them, written down separately from the gate implementation.
_IDLE, _INITIALIZED, _COMPUTED = "idle", "initialized", "computed"
_LEGAL_MOVES = {
    (_IDLE, 0): _INITIALIZED,
    (_COMPUTED, 0): _INITIALIZED,
    (_INITIALIZED, 1): _COMPUTED,
    (_COMPUTED, 2): _COMPUTED,
    (_COMPUTED, 3): _COMPUTED,
}


def test_stage_state_machine_exhaustive(gate):
    fixtures = {
        SWAP_BASE: (marshal.encode_text("hello"), 16),
        VERSION_BASE: ([], 64),
        POLYROOTS_BASE: (marshal.encode_record(["-1", "0", "1"]), 256),
    }
    with criterion("stage state machine (exhaustive, length <= 4)", 1.0):
        for base, (payload, capacity) in fixtures.items():
            for length in range(1, 5):
                for sequence in itertools.product(range(4), repeat=length):
                    gate.gate_final()
                    gate.gate_init()
                    state = _IDLE
                    for stage in sequence:
                        if stage == 0:
                            size, buffer = len(payload), list(payload)
                        elif stage == 1:
                            size, buffer = 0, []
                        elif stage == 2:
                            size, buffer = capacity, [0] * capacity
                        else:
                            size, buffer = 1, [0]
                        status = gate.gate_call(base + stage, size, buffer)
                        expected_state = _LEGAL_MOVES.get((state, stage))
                        if expected_state is None:
                            assert status == STAGE_ORDER, (base, sequence, stage, status)
                        else:
                            assert status == OK, (base, sequence, stage, status)
                            state = expected_state


def test_marshaling_round_trip_bulk():
    rng = random.Random(20260826)
    with criterion("marshaling round trip (10,000 texts + 10,000 doubles)", 10.0):
        for _ in range(10_000):
            length = rng.randrange(0, 64)
            text = "".join(_random_char(rng) for _ in range(length))
            assert marshal.decode_text(marshal.encode_text(text)) == text
        count = 0
        while count < 10_000:
            raw = struct.pack("<Q", rng.getrandbits(64))
            (value,) = struct.unpack("<d", raw)
            if value != value or value in (float("inf"), float("-inf")):
                continue
            back = marshal.decode_decimal(marshal.encode_decimal(value))
            assert struct.pack("<d", back) == struct.pack("<d", value)
            count += 1


def _random_char(rng):
    while True:
        code = rng.randrange(0, 0x110000)
        if not 0xD800 <= code <= 0xDFFF:
            return chr(code)


def _separated_roots(rng, degree):
    """Real roots plus conjugate pairs, pairwise separated by >= 0.1."""
    while True:
        chosen = []
        remaining = degree
        while remaining > 0:
            if remaining >= 2 and rng.random() < 0.4:
                z = complex(rng.uniform(-2, 2), rng.uniform(0.1, 2))
                chosen.extend([z, z.conjugate()])
                remaining -= 2
            else:
                chosen.append(complex(rng.uniform(-2, 2), 0.0))
                remaining -= 1
        if all(
            abs(a - b) >= 0.1
            for i, a in enumerate(chosen)
            for b in chosen[i + 1 :]
        ):
            return chosen


def _poly_from_roots(zs):
    coefficients = [1.0 + 0j]
    for z in zs:
        coefficients = [0j] + coefficients
        for k in range(len(coefficients) - 1):
            coefficients[k] -= z * coefficients[k + 1]
    return [c.real for c in coefficients]


def test_polyroots_oracle_equivalence(gate):
    rng = random.Random(1729)
    with criterion("polyroots oracle equivalence (500 polynomials)", 30.0):
        for _ in range(500):
            degree = rng.randint(1, 8)
            expected = _separated_roots(rng, degree)
            coefficients = _poly_from_roots(expected)
            payload = marshal.encode_record([marshal.format_decimal(c) for c in coefficients])
            fields = marshal.decode_record(call_staged(gate, POLYROOTS_BASE, payload))
            values = [marshal.parse_decimal(f) for f in fields]
            got = [complex(re_, im) for re_, im in zip(values[0::2], values[1::2])]
            assert len(got) == degree

            scale = max(1.0, max(abs(c) for c in coefficients))
            for z in got:
                residual = abs(_eval(coefficients, z)) / scale
                assert residual <= 1e-8, (coefficients, z, residual)

            cost = [[abs(g - e) for e in expected] for g in got]
            rows, cols = linear_sum_assignment(cost)
            worst = max(cost[r][c] for r, c in zip(rows, cols))
            assert worst <= 1e-6, (expected, got, worst)


def _eval(coefficients, z):
    acc = 0j
    for c in reversed(coefficients):
        acc = acc * z + c
    return acc


def test_bindgen_determinism_and_golden_files():
    with criterion("bindgen determinism and golden files", 1.0):
        manifest = parse_manifest((ROOT / "manifests" / "jobgate.mf").read_text())
        header_a, header_b = emit_header(manifest), emit_header(manifest)
        assert header_a == header_b
        assert header_a == (ROOT / "generated" / "jobgate.h").read_text()
        for dialect, name in (("py", "jobgate_client.py"), ("jl", "jobgate_client.jl")):
            stub_a, stub_b = emit_client_stub(manifest, dialect), emit_client_stub(manifest, dialect)
            assert stub_a == stub_b
            assert stub_a == (ROOT / "generated" / name).read_text()


def test_unknown_job_totality_fuzz(gate):
    rng = random.Random(404)
    with criterion("unknown-job totality fuzz (100,000 pairs)", 5.0):
        for _ in range(100_000):
            job = rng.randrange(0, 1_000_001)
            size = rng.randrange(0, 9)
            buffer = [rng.randrange(-100, 100) for _ in range(8)]
            status = gate.gate_call(job, size, buffer)
            assert 0 <= status <= 6, (job, size, status)
            if (job // 10) * 10 not in REGISTERED_BASES:
                assert status == UNKNOWN_JOB, (job, status)


def test_trace_format(gate):
    with criterion("trace format", 1.0):
        jobs = [0, 1, 3, 2, 41, 7000, 52]
        captured = io.StringIO()
        with contextlib.redirect_stderr(captured):
            buffer = [104, 101, 108, 108, 111]
            for job in jobs:
                gate.gate_call(job, 5 if len(buffer) >= 5 else 0, buffer, verbose=1)
        lines = captured.getvalue().splitlines(keepends=True)
        assert len(lines) == len(jobs)
        for job, line in zip(jobs, lines):
            match = TRACE_RE.fullmatch(line)
            assert match, line
            assert int(match.group(1)) == job
            assert int(match.group(2)) == job - (job // 10) * 10

        captured = io.StringIO()
        with contextlib.redirect_stderr(captured):
            gate.gate_call(0, 0, [], verbose=0)
            gate.gate_call(1, 0, [], verbose=0)
        assert captured.getvalue() == ""
