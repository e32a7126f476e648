"""JSON, LaTeX and plain-text output for Jordan chains."""
import json

from .algebra import ModelSpec, model_by_name
from .chain import JordanChain, c_squared
from .field import ParamRatio, parse, variable_names
from .vacuum import VacuumVector

SCHEMA_VERSION = 1

_LATEX_NAMES = {"omega": r"\omega", "epsilon": r"\epsilon"}


def _term_order(item):
    (i, j), _ = item
    return (i + j, j, i)


def chain_to_dict(chain, citations=()):
    states = []
    for m, v in enumerate(chain.states):
        terms = [{"i": i, "j": j, "coeff": str(c)} for (i, j), c in sorted(v.coeffs.items(), key=_term_order)]
        states.append({"m": m, "terms": terms})
    return {
        "schema": SCHEMA_VERSION,
        "model": chain.model.name,
        "f": {str(k): str(c) for k, c in chain.model.fcoeffs.items()},
        "n": chain.n,
        "energy": str(chain.energy),
        "c_squared": str(chain.c_squared),
        "states": states,
        "citations": list(citations),
    }


def chain_to_json(chain, citations=()):
    return json.dumps(chain_to_dict(chain, citations), indent=2) + "\n"


def chain_from_dict(doc):
    """Rebuild a JordanChain; the model comes from the stored F coefficients."""
    fco = {int(k): parse(v) for k, v in doc["f"].items()}
    model = ModelSpec(fco, name=doc.get("model", "custom"))
    if doc.get("model") in ("harmonic", "quartic", "cubic-quartic", "sextic"):
        known = model_by_name(doc["model"])
        if known != model:
            raise ValueError(f"stored F does not match the {doc['model']} model")
    n = int(doc["n"])
    states = [VacuumVector({(t["i"], t["j"]): parse(t["coeff"]) for t in s["terms"]})
              for s in sorted(doc["states"], key=lambda s: s["m"])]
    if len(states) != n + 1:
        raise ValueError(f"expected {n + 1} states, got {len(states)}")
    csq = parse(doc["c_squared"])
    if csq != c_squared(n):
        raise ValueError(f"c_squared {csq} differs from (16ab)^{n}")
    return JordanChain(model=model, n=n, energy=parse(doc["energy"]), states=states, c_squared=csq)


def chain_from_json(text):
    return chain_from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# LaTeX


def _latex_poly(p):
    if not p.terms:
        return "0"
    names = variable_names()
    out = []
    for exps, c in p.sorted_terms():
        mono = "".join(
            _LATEX_NAMES.get(names[i], names[i]) + (f"^{{{e}}}" if e > 1 else "")
            for i, e in enumerate(exps) if e)
        mag = abs(c)
        body = mono if mono and mag == 1 else f"{mag}{mono}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


def _negative(x):
    # sign convention for display: flip when the numerator's first printed term is negative
    terms = x.num.sorted_terms()
    return bool(terms) and terms[0][1] < 0


def latex_coeff(x):
    """(sign, body) with body a LaTeX fraction or ''. body '' means unit."""
    sign = -1 if _negative(x) else 1
    y = -x if sign < 0 else x
    num, den = y.num, y.den
    if den.is_one():
        body = "" if num.is_one() else _latex_poly(num)
        if len(num.terms) > 1:
            body = f"({body})"
        return sign, body
    return sign, rf"\frac{{{_latex_poly(num)}}}{{{_latex_poly(den)}}}"


def _latex_mono(i, j):
    parts = []
    if i:
        parts.append("A^+" if i == 1 else f"(A^+)^{{{i}}}")
    if j:
        parts.append("B^+" if j == 1 else f"(B^+)^{{{j}}}")
    return " ".join(parts)


def alpha_prefactor(n):
    """1/(2^(n+3) a^n b), the factor pulled out of every coefficient."""
    a, b = ParamRatio.var("a"), ParamRatio.var("b")
    return (ParamRatio(2 ** (n + 3)) * a ** n * b).inverse()


def state_to_latex(chain, m, prefactor=None):
    n = chain.n
    pref = alpha_prefactor(n) if prefactor is None else prefactor
    v = chain.states[m]
    _, pbody = latex_coeff(pref)
    head = rf"\Psi_{{{n},{m}}} &= c_{{{n},0}}"
    if pbody:
        head = rf"\Psi_{{{n},{m}}} &= \frac{{c_{{{n},0}}}}{{{_latex_poly(pref.den)}}}"
    if not v:
        return head + " \\cdot 0"
    inv = pref.inverse()
    pieces = []
    for (i, j), c in sorted(v.coeffs.items(), key=_term_order):
        sign, body = latex_coeff(c * inv)
        mono = _latex_mono(i, j)
        text = " ".join(t for t in (body, mono) if t) or "1"
        if not pieces:
            pieces.append(("- " if sign < 0 else "") + text)
        else:
            pieces.append(("- " if sign < 0 else "+ ") + text)
    return head + r" \biggl\{" + " ".join(pieces) + r"\biggr\} \Psi_0"


def chain_to_latex(chain, levels=None):
    """align environment with Psi_{n,m} for m = 1..n (or the given levels)."""
    if levels is None:
        levels = range(1, chain.n + 1) if chain.n else [0]
    rows = [state_to_latex(chain, m) for m in levels]
    return "\\begin{align}\n  " + ", \\\\\n  ".join(rows) + ".\n\\end{align}\n"


# ---------------------------------------------------------------------------
# plain text


def chain_to_text(chain):
    lines = [f"model: {chain.model.name}  F = {chain.model.f_string()}",
             f"n = {chain.n}  E_n = {chain.energy}  c^2 = {chain.c_squared}"]
    for m, v in enumerate(chain.states):
        lines.append(f"Phi_{chain.n},{m}:")
        for (i, j), c in sorted(v.coeffs.items(), key=_term_order):
            lines.append(f"  [{i},{j}] {c}")
    return "\n".join(lines) + "\n"
