"""Smoke tests for the python bindings."""

import morphocrc


def test_crc_known_remainders():
    assert morphocrc.crc(b"", poly="ccitt", init=0) == 0
    serial = morphocrc.crc(b"123456789", poly="ccitt", init=0, engine="serial")
    parallel = morphocrc.crc(b"123456789", poly="ccitt", init=0, engine="parallel")
    assert serial == parallel
    assert serial == 0x31C3


def test_crc_engines_agree_on_crc16():
    for init in (0x0000, 0xFFFF):
        a = morphocrc.crc(b"some payload bytes", poly="crc16", init=init, engine="serial")
        b = morphocrc.crc(b"some payload bytes", poly="crc16", init=init, engine="parallel")
        assert a == b


def test_derive_listing_contains_expected_lines():
    listing = morphocrc.derive_listing("ccitt", steps=8)
    assert "Register_11' = XOR_3" in listing
    assert "XOR_0 = Register_0 ^ DataIn_0" in listing
    structured = morphocrc.derive_listing("ccitt", steps=8, structured=True)
    assert '"registers"' in structured


def test_apply_network_single_step():
    state = morphocrc.apply_network("ccitt", 0x0000, 0xB5)
    # one byte through the network equals one byte through the serial engine
    assert state == morphocrc.crc(bytes([0xB5]), poly="ccitt", init=0)


def test_simulate_cycles_and_oracle():
    result = morphocrc.simulate("ccitt16", data=[0xB5], init=[0x1234])
    assert result["cycles"] == 30
    assert result["registers"][0] == morphocrc.apply_network("ccitt", 0x1234, 0xB5)

    result = morphocrc.simulate("crc16", data=[0x42] * 8, init=[0xFFFF] * 8)
    assert result["cycles"] == 26
    want = morphocrc.apply_network("crc16", 0xFFFF, 0x42)
    assert all(reg == want for reg in result["registers"])


def test_feedforward_encode():
    # D^4 + D^3 + 1 times 1 + D + D^2 + D^3 = D^7 + D^2 + D + 1
    assert morphocrc.feedforward_encode([1, 0, 0, 1, 1], "1111") == [1, 1, 1, 0, 0, 0, 0, 1]


def test_metrics_and_speedup():
    row = morphocrc.metrics(cycles=30, bits=8, frequency_hz=100_000_000)
    assert abs(row["mbps"] - 26.67) < 0.01
    assert abs(row["cycles_per_bit"] - 3.75) < 1e-12
    assert abs(morphocrc.speedup(8, 30) - 3.75) < 1e-12


def test_bench_report_headers():
    md = morphocrc.bench_report("md")
    assert md.startswith("| Algorithm | System | N# of Cycles |")
    csv = morphocrc.bench_report("csv")
    assert csv.splitlines()[0] == "algorithm,system,metric,recomputed,reference,status,provenance"
