from hypothesis import strategies as st

from shipat import DyckPath


@st.composite
def dyck_paths(draw, min_semilength=0, max_semilength=7):
    """Uniform-ish random Dyck paths built step by step."""
    s = draw(st.integers(min_semilength, max_semilength))
    ups = downs = 0
    chars = []
    while len(chars) < 2 * s:
        can_up = ups < s
        can_down = downs < ups
        if can_up and (not can_down or draw(st.booleans())):
            chars.append("U")
            ups += 1
        else:
            chars.append("D")
            downs += 1
    return DyckPath("".join(chars))
