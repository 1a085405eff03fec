import hypothesis
import pytest

from cyclelattice.multigraph import parse_edge_list

hypothesis.settings.register_profile("dev", max_examples=50, deadline=None)
hypothesis.settings.load_profile("dev")

K4_TEXT = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"
B3_TEXT = "2 3\nu v\nu v\nu v\n"
C3_TEXT = "3 3\n1 2\n2 3\n3 1\n"
P2_TEXT = "2 1\na b\n"
LOOP_TEXT = "1 1\nv v\n"
TRI_PENDANT_TEXT = "4 4\n1 2\n2 3\n3 1\n3 4\n"
TWO_LOOPS_TEXT = "1 2\nv v\nv v\n"


@pytest.fixture
def k4():
    return parse_edge_list(K4_TEXT)


@pytest.fixture
def b3():
    return parse_edge_list(B3_TEXT)


@pytest.fixture
def c3():
    return parse_edge_list(C3_TEXT)


@pytest.fixture
def p2():
    return parse_edge_list(P2_TEXT)


@pytest.fixture
def loop_graph():
    return parse_edge_list(LOOP_TEXT)


@pytest.fixture
def tri_pendant():
    return parse_edge_list(TRI_PENDANT_TEXT)


@pytest.fixture
def two_loops():
    return parse_edge_list(TWO_LOOPS_TEXT)
