"""Printed coefficient tables and their comparison with solved chains.

A fixture file is line oriented::

    @model quartic
    @n 2
    @prefactor 1/(32*a^2*b)
    m i j coeff citation confidence [note]

Each data line gives the coefficient of (A+)^i (B+)^j inside the printed
braces of Psi_{n,m}; the state itself is prefactor * coeff (the c_{n,0}
factor is never represented).  ``confidence`` is ``high`` or ``low``; low
lines are suspected misprints and must be backed by a demonstration that the
printed value breaks the chain conditions.
"""
import shlex
from dataclasses import dataclass, field
from importlib import resources

from .algebra import model_by_name
from .chain import JordanChain, check_chain, harmonic_closed_form
from .field import ParamRatio, parse
from .vacuum import VacuumVector

EXACT = "exact-match"
SIGN = "sign"
TYPO = "known-typo-candidate"
MISMATCH = "mismatch"
MISSING = "missing-in-fixture"


class FixtureError(ValueError):
    pass


@dataclass(frozen=True)
class FixtureLine:
    m: int
    i: int
    j: int
    text: str
    citation: str
    confidence: str = "high"
    note: str = ""

    @property
    def coeff(self):
        return parse(self.text)

    @property
    def low(self):
        return self.confidence == "low"


@dataclass
class FixtureTable:
    model: str
    n: int
    prefactor: ParamRatio
    lines: list = field(default_factory=list)
    source: str = ""

    def levels(self):
        return sorted({ln.m for ln in self.lines})

    def state(self, m):
        """The printed Phi_{n,m} as a VacuumVector (prefactor applied)."""
        return VacuumVector({(ln.i, ln.j): self.prefactor * ln.coeff for ln in self.lines if ln.m == m})

    def flagged(self):
        return [ln for ln in self.lines if ln.low]


def parse_fixture(text, source="<string>"):
    meta = {}
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("@"):
            key, _, value = stripped[1:].partition(" ")
            meta[key] = value.strip()
            continue
        try:
            parts = shlex.split(stripped)
        except ValueError as exc:
            raise FixtureError(f"{source}:{lineno}: {exc}") from None
        if len(parts) not in (6, 7):
            raise FixtureError(f"{source}:{lineno}: expected 6 or 7 fields, got {len(parts)}")
        m, i, j = (int(x) for x in parts[:3])
        conf = parts[5]
        if conf not in ("high", "low"):
            raise FixtureError(f"{source}:{lineno}: confidence must be high or low, got {conf!r}")
        ln = FixtureLine(m, i, j, parts[3], parts[4], conf, parts[6] if len(parts) == 7 else "")
        try:
            ln.coeff
        except (ValueError, ZeroDivisionError) as exc:
            raise FixtureError(f"{source}:{lineno}: coefficient {parts[3]!r} does not parse: {exc}") from None
        lines.append(ln)
    for key in ("model", "n", "prefactor"):
        if key not in meta:
            raise FixtureError(f"{source}: missing @{key}")
    cites = [ln.citation for ln in lines]
    if len(set(cites)) != len(cites):
        raise FixtureError(f"{source}: duplicate citations")
    return FixtureTable(meta["model"], int(meta["n"]), parse(meta["prefactor"]), lines, source)


def _fixture_files():
    return resources.files("jordan_ladder").joinpath("fixtures")


def available_fixtures():
    """Sorted (model, n) pairs with a data file."""
    out = []
    for entry in _fixture_files().iterdir():
        if entry.name.endswith(".txt"):
            model, _, n = entry.name[:-4].rpartition("_n")
            out.append((model, int(n)))
    return sorted(out)


def load_fixture(model, n):
    name = f"{model}_n{n}.txt"
    entry = _fixture_files().joinpath(name)
    if not entry.is_file():
        raise FixtureError(f"no fixture for model {model!r} at n={n}")
    return parse_fixture(entry.read_text(), source=name)


def harmonic_fixture(n):
    """Fixture generated from the binomial closed form for the harmonic model."""
    lines = []
    for m in range(1, n + 1):
        for (i, j), c in sorted(harmonic_closed_form(n, m).coeffs.items()):
            lines.append(FixtureLine(m, i, j, str(c), f"harmonic-closed-form/Psi{n},{m}/{i},{j}"))
    return FixtureTable("harmonic", n, ParamRatio.one(), lines, source="closed form")


def fixture_for(model, n):
    try:
        return load_fixture(model, n)
    except FixtureError:
        if model == "harmonic":
            return harmonic_fixture(n)
        raise


# ---------------------------------------------------------------------------


@dataclass
class DiffEntry:
    m: int
    i: int
    j: int
    status: str
    printed: object
    solved: ParamRatio
    citation: str = ""
    note: str = ""


@dataclass
class DiffReport:
    model: str
    n: int
    entries: list

    @property
    def ok(self):
        """True when every unflagged printed line matches exactly and no solver
        term is missing from the print."""
        return all(e.status in (EXACT, TYPO) for e in self.entries)

    def counts(self):
        out = {}
        for e in self.entries:
            out[e.status] = out.get(e.status, 0) + 1
        return out

    def problems(self):
        return [e for e in self.entries if e.status != EXACT]


def compare_to_paper(chain, fixture):
    """Per-monomial exact comparison of the chain against a printed table.

    Only the levels m present in the fixture are compared; within those, any
    solver monomial the fixture lacks is reported as missing.
    """
    if chain.n != fixture.n:
        raise FixtureError(f"fixture is for n={fixture.n}, chain has n={chain.n}")
    pref_inv = fixture.prefactor.inverse()
    entries = []
    for m in fixture.levels():
        solved = chain.states[m]
        seen = set()
        for ln in (x for x in fixture.lines if x.m == m):
            seen.add((ln.i, ln.j))
            got = solved.coefficient(ln.i, ln.j) * pref_inv
            want = ln.coeff
            if got == want:
                status = EXACT
            elif ln.low:
                status = TYPO
            elif got == -want:
                status = SIGN
            else:
                status = MISMATCH
            entries.append(DiffEntry(m, ln.i, ln.j, status, want, got, ln.citation, ln.note))
        for (i, j), c in solved.sorted_items():
            if (i, j) not in seen:
                entries.append(DiffEntry(m, i, j, MISSING, None, c * pref_inv))
    return DiffReport(fixture.model, fixture.n, entries)


def printed_chain(chain, fixture, lines=None):
    """Copy of ``chain`` with the given fixture lines (default: all flagged
    ones) substituted at their printed values."""
    lines = fixture.flagged() if lines is None else lines
    states = list(chain.states)
    for ln in lines:
        coeffs = dict(states[ln.m].coeffs)
        val = fixture.prefactor * ln.coeff
        if val:
            coeffs[(ln.i, ln.j)] = val
        else:
            coeffs.pop((ln.i, ln.j), None)
        states[ln.m] = VacuumVector._raw(coeffs)
    return JordanChain(chain.model, chain.n, chain.energy, states, chain.c_squared,
                       dict(chain.diagnostics))


def demonstrate_typos(chain, fixture):
    """For each flagged line: the invariant failures of the printed version.

    Returns {citation: failures}; a flagged line is justified when its list is
    nonempty while ``check_chain(chain)`` is empty.
    """
    return {ln.citation: check_chain(printed_chain(chain, fixture, [ln])) for ln in fixture.flagged()}


def model_for_fixture(fixture):
    return model_by_name(fixture.model)
