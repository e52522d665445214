from pathlib import Path

import pytest

from arcalg.diagrams import CupDiagram
from arcalg.gluing import glue, glue_extended
from arcalg.render import render

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "glued_n1_nested.txt": lambda: glue_extended("-+", "-+"),
    "glued_n2_red.txt": lambda: glue_extended("-++-", "++--"),
    "cups_nested.txt": lambda: CupDiagram(((1, 4), (2, 3))),
    "cups_adjacent_glued.txt": lambda: glue(CupDiagram(((1, 2), (3, 4))), CupDiagram(((1, 4), (2, 3)))),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_render_matches_golden(name):
    assert render(CASES[name]()) + "\n" == (GOLDEN / name).read_text()


def test_render_is_deterministic():
    g = glue_extended("+-+-", "-+-+")
    assert render(g) == render(glue_extended("+-+-", "-+-+"))


def test_inner_cup_is_black():
    pic = render(glue_extended("-+", "-+")).splitlines()
    assert pic[3].split() == ["G", "B", "B", "G"]


def test_red_marker():
    assert "R" in render(glue_extended("-++-", "++--")).splitlines()[4]
