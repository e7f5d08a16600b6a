"""Shared hypothesis strategies and the acceptance-summary hook."""

from hypothesis import strategies as st

from pairgate.model import Geometry, Medium, Process, WaveTriplet

_acceptance_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance_outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_acceptance_outcomes):
        verdict = "PASS" if _acceptance_outcomes[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"{nodeid.split('::')[-1]}: {verdict}")

# optical angular frequencies from mid-IR to near-UV (rad/s)
omegas = st.floats(min_value=1e14, max_value=1e16)
indices = st.floats(min_value=1.0, max_value=4.0)
sections = st.floats(min_value=1e-12, max_value=1e-2)
delta_omegas = st.floats(min_value=1e3, max_value=1e13)
lengths = st.floats(min_value=1e-6, max_value=1e3)
wavelengths = st.floats(min_value=4e-7, max_value=4e-6)
chi2_values = st.floats(min_value=1e-13, max_value=1e-9)
chi3_values = st.floats(min_value=1e-24, max_value=1e-16)
processes = st.sampled_from(Process)
gain_products = st.floats(min_value=0.0, max_value=20.0)


@st.composite
def triplets(draw, process=None):
    proc = draw(processes) if process is None else process
    omega_s = draw(omegas)
    omega_i = draw(omegas)
    return WaveTriplet.from_signal_idler(omega_s, omega_i, proc)


@st.composite
def media(draw, process=None):
    proc = draw(processes) if process is None else process
    chi = draw(chi2_values if proc is Process.SPDC else chi3_values)
    return Medium(
        process=proc,
        chi_eff=chi,
        n_p=draw(indices),
        n_s=draw(indices),
        n_i=draw(indices),
    )


@st.composite
def geometries(draw):
    return Geometry(length=draw(lengths), section=draw(sections))


@st.composite
def matched_scenarios(draw, process=None):
    """(medium, triplet, geometry) with consistent process."""
    proc = draw(processes) if process is None else process
    return draw(media(process=proc)), draw(triplets(process=proc)), draw(geometries())
