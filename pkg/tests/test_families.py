import pytest

from alphaline.families import Family, FamilyParamError, FamilySpec, generate, parse_family_range
from alphaline.graph import degree_sequence
from alphaline.solvers import matching_bruteforce, mis_bruteforce


def spec(name, **kw):
    return FamilySpec.of(name, **kw)


# (family, params, vertices, edges); counts derived by hand from each layout
COUNTS = [
    ("complete", {"n": 5}, 5, 10),
    ("complete_bipartite", {"m": 2, "n": 3}, 5, 6),
    ("path", {"n": 4}, 4, 3),
    ("cycle", {"n": 5}, 5, 5),
    ("wheel", {"n": 3}, 4, 6),
    ("helm", {"n": 3}, 7, 9),
    ("fan", {"n": 4}, 5, 7),
    ("sun", {"n": 4}, 8, 14),
    ("sunlet", {"n": 5}, 10, 10),
    ("armed_crown", {"m": 3, "n": 3}, 9, 9),
]


@pytest.mark.parametrize("name, params, nv, ne", COUNTS)
def test_small_counts(name, params, nv, ne):
    g = generate(spec(name, **params))
    assert (g.n, g.m) == (nv, ne)


@pytest.mark.parametrize("n", range(3, 13))
def test_closed_form_counts(n):
    assert (lambda g: (g.n, g.m))(generate(spec("wheel", n=n))) == (n + 1, 2 * n)
    assert (lambda g: (g.n, g.m))(generate(spec("helm", n=n))) == (2 * n + 1, 3 * n)
    assert generate(spec("sun", n=n)).n == 2 * n
    assert generate(spec("sunlet", n=n)).n == 2 * n
    for m in range(2, 6):
        g = generate(spec("armed_crown", m=m, n=n))
        assert (g.n, g.m) == (n * m, n * m)


def test_wheel_layout():
    g = generate(spec("wheel", n=5))
    degs = degree_sequence(g)
    assert degs[5] == 5
    assert degs[:5] == [3] * 5
    assert generate(spec("wheel", n=3)) == generate(spec("complete", n=4))


def test_sun_layout():
    n = 5
    g = generate(spec("sun", n=n))
    for i in range(n):
        assert g.adjacency[n + i] == {i, (i + 1) % n}
    for i in range(n):
        for j in range(i + 1, n):
            assert g.has_edge(i, j)


def test_armed_crown_arms_are_paths_on_m_vertices():
    m, n = 4, 3
    g = generate(spec("armed_crown", m=m, n=n))
    degs = degree_sequence(g)
    assert degs[:n] == [3] * n
    # each arm ends in a leaf; m - 2 internal arm vertices of degree 2
    assert degs.count(1) == n
    assert degs.count(2) == n * (m - 2)


def test_armed_crown_m2_behaves_like_sunlet():
    for n in (3, 4, 5):
        ac = generate(spec("armed_crown", m=2, n=n))
        sl = generate(spec("sunlet", n=n))
        assert (ac.n, ac.m) == (sl.n, sl.m)
        assert sorted(degree_sequence(ac)) == sorted(degree_sequence(sl))
        assert mis_bruteforce(ac).value == mis_bruteforce(sl).value
        assert matching_bruteforce(ac).value == matching_bruteforce(sl).value
    # identical layouts, in fact
    assert generate(spec("armed_crown", m=2, n=4)) == generate(spec("sunlet", n=4))


@pytest.mark.parametrize("text", ["complete:n=1", "fan:n=1", "complete_bipartite:m=1,n=1"])
def test_smallest_members(text):
    generate(FamilySpec.parse(text))


@pytest.mark.parametrize(
    "text, needle",
    [
        ("wheel:n=2", "n >= 3"),
        ("helm:n=2", "n >= 3"),
        ("sun:n=2", "n >= 3"),
        ("sunlet:n=1", "n >= 3"),
        ("cycle:n=2", "n >= 3"),
        ("path:n=1", "n >= 2"),
        ("complete:n=0", "n >= 1"),
        ("armed_crown:m=1,n=4", "m >= 2"),
        ("armed_crown:m=2,n=2", "n >= 3"),
        ("complete_bipartite:m=0,n=2", "m >= 1"),
        ("wheel", "takes parameters"),
        ("wheel:m=3,n=4", "takes parameters"),
        ("octahedron:n=3", "unknown family"),
        ("wheel:n=x", "bad parameter"),
    ],
)
def test_parameter_errors(text, needle):
    with pytest.raises(FamilyParamError, match=needle):
        generate(FamilySpec.parse(text))


def test_parse_ranges_ordered():
    specs = parse_family_range("armed_crown:n=3..4,m=2..3")
    assert [str(s) for s in specs] == [
        "armed_crown:m=2,n=3",
        "armed_crown:m=2,n=4",
        "armed_crown:m=3,n=3",
        "armed_crown:m=3,n=4",
    ]
    assert len(parse_family_range("wheel:n=3..10")) == 8
    with pytest.raises(FamilyParamError):
        FamilySpec.parse("wheel:n=3..4")


def test_spec_str_round_trip():
    for f in Family:
        for s in parse_family_range(f"{f.value}:" + ",".join(
            f"{k}=3" for k in ("m", "n") if k == "n" or f in (Family.ARMED_CROWN, Family.COMPLETE_BIPARTITE)
        )):
            assert FamilySpec.parse(str(s)) == s


def test_generators_deterministic_and_no_isolated_vertices():
    for f in Family:
        params = {"n": 4}
        if f in (Family.ARMED_CROWN, Family.COMPLETE_BIPARTITE):
            params["m"] = 3
        s = FamilySpec.of(f, **params)
        assert generate(s) == generate(s)
        assert generate(s).isolated_vertices() == []
