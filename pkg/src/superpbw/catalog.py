"""Built-in example algebras, exercised through the definition parser.

Each entry is a definition-file text; load_bundle parses on first use and
caches.  The collection covers a purely even line, a purely odd line, odd
generators with zero and with nonzero self bracket, a three-dimensional
simple algebra at two primes, and a super algebra whose supertrace
character is nonzero.
"""

from __future__ import annotations

from .definitions import AlgebraBundle, parse_definition_text

CATALOG: dict[str, str] = {
    "abelian1-p3": """
algebra abelian1-p3
prime 3
generator e even
split zero :
representation triv zero 1
repbasis triv : 0
representation pair zero 2
repbasis pair : 0 1
""",
    "oddline-p3": """
algebra oddline-p3
prime 3
generator eps odd
split zero :
representation triv zero 1
repbasis triv : 0
representation opair zero 2
repbasis opair : 0 1
""",
    "abelian22-p3": """
algebra abelian22-p3
prime 3
generator e1 even
generator e2 even
generator eps1 odd
generator eps2 odd
split zero :
split half : e2 eps2
split oddh : eps2
split evenh : e2
split evens : e1 e2
split odds : eps1 eps2
split all : e1 e2 eps1 eps2
representation triv zero 1
repbasis triv : 0
representation htriv half 1
repbasis htriv : 0
representation otriv oddh 1
repbasis otriv : 0
representation etriv evenh 1
repbasis etriv : 0
representation vtriv evens 1
repbasis vtriv : 0
representation wtriv odds 1
repbasis wtriv : 0
representation atriv all 1
repbasis atriv : 0
""",
    "abelian22-p5": """
algebra abelian22-p5
prime 5
generator e1 even
generator e2 even
generator eps1 odd
generator eps2 odd
split zero :
split half : e2 eps2
split oddh : eps2
split evenh : e2
split evens : e1 e2
split odds : eps1 eps2
split all : e1 e2 eps1 eps2
representation triv zero 1
repbasis triv : 0
representation htriv half 1
repbasis htriv : 0
representation otriv oddh 1
repbasis otriv : 0
representation etriv evenh 1
repbasis etriv : 0
representation vtriv evens 1
repbasis vtriv : 0
representation wtriv odds 1
repbasis wtriv : 0
representation atriv all 1
repbasis atriv : 0
""",
    "heis-p3": """
algebra heis-p3
prime 3
generator z even
generator e1 odd
generator e2 odd
bracket e1 e2 : 1 0 0
split zline : z
split mixed : z e1
representation triv zline 1
repbasis triv : 0
representation jordan zline 2
repbasis jordan : 0 0
repaction jordan z : 0 1 0 0
representation mtriv mixed 1
repbasis mtriv : 0
representation odd1 mixed 2
repbasis odd1 : 0 1
repaction odd1 e1 : 0 0 1 0
""",
    "clifford-p3": """
algebra clifford-p3
prime 3
generator z even
generator eps odd
bracket eps eps : 1 0
split zline : z
representation triv zline 1
repbasis triv : 0
representation jordan zline 2
repbasis jordan : 0 0
repaction jordan z : 0 1 0 0
""",
    "sl2-p3": """
algebra sl2-p3
prime 3
generator h even
generator e even
generator f even
bracket h e : 0 2 0
bracket h f : 0 0 -2
bracket e f : 1 0 0
pmap h : 1 0 0
split borel : h e
split all : h e f
representation triv borel 1
repbasis triv : 0
representation wt1 borel 1
repbasis wt1 : 0
repaction wt1 h : 1
representation nat2 all 2
repbasis nat2 : 0 0
repaction nat2 h : 1 0 0 -1
repaction nat2 e : 0 1 0 0
repaction nat2 f : 0 0 1 0
character wt1c borel : 1 0
""",
    "sl2-p5": """
algebra sl2-p5
prime 5
generator h even
generator e even
generator f even
bracket h e : 0 2 0
bracket h f : 0 0 -2
bracket e f : 1 0 0
pmap h : 1 0 0
split borel : h e
representation triv borel 1
repbasis triv : 0
representation wt1 borel 1
repbasis wt1 : 0
repaction wt1 h : 1
character wt1c borel : 1 0
""",
    "gl11-p3": """
algebra gl11-p3
prime 3
generator a even
generator b even
generator x odd
generator y odd
bracket a x : 0 0 1 0
bracket a y : 0 0 0 -1
bracket b x : 0 0 -1 0
bracket b y : 0 0 0 1
bracket x y : 1 1 0 0
pmap a : 1 0 0 0
pmap b : 0 1 0 0
split sborel : a b x
representation triv sborel 1
repbasis triv : 0
representation nat sborel 2
repbasis nat : 0 1
repaction nat a : 1 0 0 0
repaction nat b : 0 0 0 1
repaction nat x : 0 1 0 0
character sdet sborel : 1 -1 0
""",
    "gl11-p5": """
algebra gl11-p5
prime 5
generator a even
generator b even
generator x odd
generator y odd
bracket a x : 0 0 1 0
bracket a y : 0 0 0 -1
bracket b x : 0 0 -1 0
bracket b y : 0 0 0 1
bracket x y : 1 1 0 0
pmap a : 1 0 0 0
pmap b : 0 1 0 0
split sborel : a b x
representation triv sborel 1
repbasis triv : 0
representation nat sborel 2
repbasis nat : 0 1
repaction nat a : 1 0 0 0
repaction nat b : 0 0 0 1
repaction nat x : 0 1 0 0
character sdet sborel : 1 -1 0
""",
}

_cache: dict[str, AlgebraBundle] = {}


def catalog_names() -> list[str]:
    return list(CATALOG)


def load_bundle(name: str) -> AlgebraBundle:
    if name not in CATALOG:
        raise KeyError(f"no catalog entry {name!r}")
    bundle = _cache.get(name)
    if bundle is None:
        bundle = parse_definition_text(CATALOG[name])
        _cache[name] = bundle
    return bundle


def instance_pairs() -> list[tuple[str, str]]:
    """All (catalog name, split name) pairs the checks run over."""
    out = []
    for name in CATALOG:
        for sname in load_bundle(name).splits:
            out.append((name, sname))
    return out
