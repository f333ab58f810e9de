"""Symbol table construction, erasure, hierarchy, and name resolution."""

from __future__ import annotations

import pytest

from ucov import CyclicHierarchy, DuplicateSymbol, build_symbol_table, parse_unit
from ucov import nodes as n
from ucov.symtab import ROOT_TYPE, UnitContext


def table_of(*sources: str):
    units = [parse_unit(src, f"S{i}.java") for i, src in enumerate(sources)]
    return build_symbol_table(units)


def test_fqn_assignment_and_nesting():
    table = table_of("package p.q;\npublic class A { public class B { } }")
    assert table.lookup_type("p.q.A") is not None
    inner = table.lookup_type("p.q.A.B")
    assert inner is not None
    assert inner.enclosing == "p.q.A"


def test_default_package_fqn():
    table = table_of("class A { }")
    assert table.lookup_type("A") is not None


def test_synthesized_constructor():
    table = table_of("package p; public class A { }")
    ctors = [
        m for m in table.members_of("p.A") if m.kind is n.MemberKind.CONSTRUCTOR
    ]
    assert len(ctors) == 1
    assert ctors[0].synthesized
    assert ctors[0].signature == "A()"
    assert ctors[0].visibility() == "public"


def test_declared_constructor_suppresses_synthesis():
    table = table_of("package p; public class A { private A(int x) { } }")
    ctors = [
        m for m in table.members_of("p.A") if m.kind is n.MemberKind.CONSTRUCTOR
    ]
    assert len(ctors) == 1
    assert not ctors[0].synthesized
    assert ctors[0].signature == "A(int)"


def test_interfaces_get_no_constructor_and_normalized_members():
    table = table_of("package p; public interface I { int K = 1; void f(); }")
    members = {m.name: m for m in table.members_of("p.I")}
    assert all(m.kind is not n.MemberKind.CONSTRUCTOR for m in members.values())
    assert {"static", "final", "public"} <= members["K"].modifiers
    assert {"abstract", "public"} <= members["f"].modifiers


def test_erased_signatures():
    table = table_of(
        "package p; import java.util.List;\n"
        "public class A<T> { public void f(List<T> xs, T x, int[] a) { } }"
    )
    (m,) = [x for x in table.members_of("p.A") if x.name == "f"]
    assert m.signature == f"f(java.util.List,{ROOT_TYPE},int[])"


def test_erasure_invariant_under_type_parameter_renaming():
    sig = lambda src: [
        m.signature
        for m in table_of(src).members_of("p.A")
        if m.kind is n.MemberKind.METHOD
    ]
    assert sig("package p; public class A<E> { public boolean add(E e) { } }") == sig(
        "package p; public class A<T> { public boolean add(T t) { } }"
    )


def test_duplicate_type_and_member_rejected():
    with pytest.raises(DuplicateSymbol):
        table_of("package p; class A { }", "package p; class A { }")
    with pytest.raises(DuplicateSymbol):
        table_of("package p; class A { void f(int x) { } void f(int y) { } }")


def test_overloads_are_not_duplicates():
    table = table_of("package p; class A { void f(int x) { } void f(String s) { } }")
    assert len([m for m in table.members_of("p.A") if m.name == "f"]) == 2


def test_cyclic_hierarchy_rejected():
    with pytest.raises(CyclicHierarchy):
        table_of("package p; class A extends B { }", "package p; class B extends A { }")
    with pytest.raises(CyclicHierarchy):
        table_of("package p; interface I extends I { }")


def test_unknown_supertype_is_external_not_error():
    table = table_of("package p; public class A extends Unseen { }")
    info = table.lookup_type("p.A")
    assert info.supertypes == ("Unseen",)
    assert info.external_supertypes == frozenset({"Unseen"})


def test_supertype_closure_nearest_first_no_duplicates():
    table = table_of(
        "package p; interface I { }",
        "package p; interface J extends I { }",
        "package p; class A implements I { }",
        "package p; class B extends A implements J { }",
    )
    closure = table.supertype_closure("p.B")
    assert closure[0] == "p.B"
    assert set(closure) == {"p.B", "p.A", "p.J", "p.I"}
    assert len(closure) == len(set(closure))  # diamond visited once
    assert closure.index("p.A") < closure.index("p.I")
    assert table.is_subtype("p.B", "p.I")
    assert not table.is_subtype("p.I", "p.B")


def test_overlay_table_sees_base_types():
    lib = table_of("package lib; public class A { }")
    client_unit = parse_unit(
        "package app; import lib.A; class C extends A { }", "C.java"
    )
    client = build_symbol_table([client_unit], base=lib)
    assert client.lookup_type("lib.A") is not None
    assert client.lookup_type("app.C").supertypes == ("lib.A",)
    assert lib.lookup_type("app.C") is None  # base is not polluted


def test_resolve_type_name_precedence():
    table = table_of(
        "package p; class Local { }",
        "package q; public class Imported { }",
        "package r; public class OnDemand { }",
    )
    unit = parse_unit(
        "package p; import q.Imported; import r.*; class X { }", "X.java"
    )
    ctx = UnitContext.for_unit(table, unit)
    assert ctx.resolve_type_name("Local") == ("p.Local", True)
    assert ctx.resolve_type_name("Imported") == ("q.Imported", True)
    assert ctx.resolve_type_name("OnDemand") == ("r.OnDemand", True)
    assert ctx.resolve_type_name("Nowhere") == ("Nowhere", False)
    assert ctx.resolve_type_name("q.Imported") == ("q.Imported", True)


def test_type_params_resolve_to_root_type():
    table = table_of("package p; class A { }")
    unit = parse_unit("package p; class X { }", "X.java")
    ctx = UnitContext.for_unit(table, unit)
    fqn, known = ctx.resolve_type_name("T", type_params=frozenset({"T"}))
    assert fqn == ROOT_TYPE
    assert known is (table.lookup_type(ROOT_TYPE) is not None)


def test_find_field_searches_supertypes():
    table = table_of(
        "package p; public class A { public int x; }",
        "package p; public class B extends A { }",
    )
    f = table.find_field("p.B", "x")
    assert f is not None and f.declaring == "p.A"
    assert table.find_field("p.B", "missing") is None
