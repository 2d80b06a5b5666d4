"""Named reference patterns used by the CLI, the API and the explorer UI."""

from __future__ import annotations

from .patterns import Pattern

FIXTURES: dict[str, Pattern] = {
    # NPT pair
    "eq13a": Pattern.parse(".xx./x..x/.xx./x.x."),
    "eq13b": Pattern.parse("..x./x..x/..x./...x"),
    # PPT entangled pair detected through a single sparse line
    "eq14a": Pattern.parse("..xx/x..x/.x.x/...."),
    "eq14b": Pattern.parse(".xxx/x.xx/..xx/...."),
    # PPT entangled, only the refined line criterion fires
    "eq15": Pattern.parse("x..x/.xx./xx.x/xx.x"),
    # separable with a multiplicity-2 covering by five quadruples
    "eq23": Pattern.parse(".xxx/.xxx/.xxx/x..."),
    # separable rank-8 block (rows and columns 1..3 minus the center)
    "rank8": Pattern.parse(".xxx/.x.x/.xxx/...."),
    # two more covering-certified patterns
    "appb1": Pattern.parse(".xxx/.x.x/.xxx/x..."),
    "appb2": Pattern.parse(".xxx/.x.x/.x.x/x..."),
    # the rank-11 pattern: every point carries at least three quadruples
    "rank11": Pattern.parse("x..x/xx.x/xxx./xxx."),
}

#: Names exposed as explorer presets, in display order.
EXPLORER_FIXTURES = ("eq13a", "eq13b", "eq14a", "eq14b", "eq15", "eq23", "rank11")


def fixture(name: str) -> Pattern:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}")
