import random
from itertools import permutations

import pytest

from ttcbits.closure import TTC, Contact, Journey, read_contact_file
from ttcbits.oracles import (check_journey, oracle_can_reach,
                             oracle_minimal_intervals)

# the worked four-vertex example: a=0, b=1, c=2, d=3
FIG_CONTACTS = [Contact(0, 1, 1), Contact(0, 1, 2), Contact(1, 3, 3),
                Contact(2, 0, 4), Contact(2, 3, 5)]
FIG_EDGES = {(0, 1): [(1, 2), (2, 3)], (0, 3): [(2, 4)], (1, 3): [(3, 4)],
             (2, 0): [(4, 5)], (2, 3): [(5, 6)]}

IMPLS = ["compact-dense", "compact-sparse", "bptree"]


@pytest.mark.parametrize("impl", IMPLS)
def test_worked_example_closure(impl):
    T = TTC(4, tau=6, delta=1, impl=impl)
    T.add_contacts(FIG_CONTACTS)
    assert T.edges() == FIG_EDGES
    assert T.can_reach(0, 3, 1, 4)  # satisfied by the tighter [2, 4]
    assert not T.can_reach(3, 0, 1, 6)  # no outgoing contacts from d


@pytest.mark.parametrize("impl", IMPLS)
def test_worked_example_insensitive_to_order(impl):
    for perm in list(permutations(FIG_CONTACTS))[::10]:
        T = TTC(4, tau=6, delta=1, impl=impl)
        T.add_contacts(perm)
        assert T.edges() == FIG_EDGES


def test_single_contact_only_touches_one_pair():
    T = TTC(5, tau=10, delta=2)
    T.add_contact(1, 3, 4)
    assert T.edges() == {(1, 3): [(4, 6)]}


def test_contact_validation():
    T = TTC(3, tau=5, delta=2)
    with pytest.raises(ValueError):
        T.add_contact(0, 0, 1)  # self-loop
    with pytest.raises(ValueError):
        T.add_contact(0, 7, 1)  # vertex out of range
    with pytest.raises(ValueError):
        T.add_contact(0, 1, 0)  # timestamps start at 1
    with pytest.raises(ValueError):
        T.add_contact(0, 1, 5)  # arrives at 7 > tau + 1
    T.add_contact(0, 1, 4)  # arrives exactly at tau + 1


def test_open_lifetime_grows():
    T = TTC(3, tau=None, delta=1)
    assert T.lifetime == 0
    T.add_contact(0, 1, 99)
    assert T.lifetime == 99


def test_can_reach_self():
    T = TTC(2, tau=4)
    assert T.can_reach(1, 1, 2, 2)
    assert not T.can_reach(1, 1, 3, 2)


def test_is_connected():
    T = TTC(4, tau=6, delta=1)
    T.add_contacts(FIG_CONTACTS)
    assert not T.is_connected(1, 6)  # d reaches nobody
    assert TTC(1, tau=4).is_connected(1, 4)
    # complete contact set over the whole lifetime
    n, tau = 3, 6
    C = TTC(n, tau=tau, delta=1)
    contacts = [(u, v, t) for u in range(n) for v in range(n) if u != v
                for t in range(1, tau + 1)]
    C.add_contacts(Contact(*c) for c in contacts)
    assert C.is_connected(1, tau + 1)
    assert oracle_can_reach(contacts, n, 1, 0, 2, 1, tau + 1)


@pytest.mark.parametrize("impl", IMPLS)
def test_journey_reconstruction_worked_example(impl):
    T = TTC(4, tau=6, delta=1, impl=impl)
    T.add_contacts(FIG_CONTACTS)
    J = T.reconstruct_journey(0, 3, 1, 6)
    assert [tuple(c) for c in J.contacts] == [(0, 1, 2), (1, 3, 3)]
    assert J.departure == 2 and J.arrival == 4
    assert check_journey(J, FIG_CONTACTS, 0, 3, 1, 1, 6)
    assert T.reconstruct_journey(3, 0, 1, 6) is None


def test_direct_contact_single_hop_journey():
    T = TTC(3, tau=8, delta=3)
    T.add_contact(1, 2, 4)
    J = T.reconstruct_journey(1, 2, 1, 8)
    assert len(J) == 1 and J.contacts[0] == Contact(1, 2, 4)
    assert J.arrival == 7


@pytest.mark.parametrize("impl", IMPLS)
def test_random_instances_match_oracles(impl):
    rng = random.Random(hash(impl) & 0xFFFF)
    for _ in range(6):
        n = rng.choice([3, 4, 6])
        tau = rng.choice([10, 16])
        delta = rng.choice([1, 2])
        universe = [(u, v, t) for u in range(n) for v in range(n) if u != v
                    for t in range(1, tau + 2 - delta)]
        contacts = rng.sample(universe, rng.randint(1, min(len(universe), 40)))
        T = TTC(n, tau=tau, delta=delta, impl=impl)
        T.add_contacts(Contact(*c) for c in contacts)
        om = oracle_minimal_intervals(contacts, n, delta)
        expected = {(u, v): om[u][v]
                    for u in range(n) for v in range(n) if om[u][v]}
        assert T.edges() == expected
        for _ in range(200):
            u, v = rng.randrange(n), rng.randrange(n)
            t1 = rng.randint(1, tau)
            t2 = rng.randint(t1, tau + 1)
            reach = oracle_can_reach(contacts, n, delta, u, v, t1, t2)
            assert T.can_reach(u, v, t1, t2) == reach
            J = T.reconstruct_journey(u, v, t1, t2)
            assert (J is not None) == reach
            if J is not None:
                assert check_journey(J, contacts, u, v, delta, t1, t2)


def test_journey_chaining_rule_holds():
    rng = random.Random(55)
    n, tau, delta = 5, 20, 3
    universe = [(u, v, t) for u in range(n) for v in range(n) if u != v
                for t in range(1, tau + 2 - delta)]
    contacts = rng.sample(universe, 60)
    T = TTC(n, tau=tau, delta=delta)
    T.add_contacts(Contact(*c) for c in contacts)
    for _ in range(300):
        u, v = rng.randrange(n), rng.randrange(n)
        t1 = rng.randint(1, tau)
        t2 = rng.randint(t1, tau + 1)
        J = T.reconstruct_journey(u, v, t1, t2)
        if J is None or not J.contacts:
            continue
        for prev, nxt in zip(J.contacts, J.contacts[1:]):
            assert nxt.t >= prev.t + delta
        assert t1 <= J.departure and J.arrival <= t2


def test_interval_set_accessor_and_diagonal():
    T = TTC(3, tau=4)
    T.add_contact(0, 1, 1)
    assert T.interval_set(0, 1).intervals() == [(1, 2)]
    with pytest.raises(ValueError):
        T.interval_set(2, 2)


def test_contact_file_round_trip(tmp_path):
    path = tmp_path / "contacts.txt"
    path.write_text(
        "# a comment line\n"
        "0 1 1\n"
        "\n"
        "1 2 3   # trailing comment\n"
        "2 0 5\n")
    contacts = read_contact_file(path)
    assert contacts == [Contact(0, 1, 1), Contact(1, 2, 3), Contact(2, 0, 5)]
    T = TTC(3, tau=10)
    T.add_contacts(contacts)
    assert T.can_reach(0, 2, 1, 5)
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n")
    with pytest.raises(ValueError):
        read_contact_file(bad)


def test_dump_and_accounting():
    T = TTC(3, tau=6, impl="compact-dense")
    T.add_contact(0, 1, 2)
    text = T.dump()
    assert text.splitlines()[0] == "ttc n=3 delta=1 impl=compact-dense"
    assert "pair 0->1" in text
    assert T.accounted_bytes() > 0


def test_journey_dataclass():
    j = Journey((Contact(0, 1, 2), Contact(1, 2, 4)), delta=2)
    assert j.departure == 2 and j.arrival == 6 and len(j) == 2
    empty = Journey((), delta=1)
    assert empty.departure is None and empty.arrival is None
