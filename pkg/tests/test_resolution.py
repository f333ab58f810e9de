"""Static expression typing and deterministic overload resolution."""

from __future__ import annotations

from ucov import build_symbol_table, parse_unit
from ucov.symtab import ResolutionStatus, UnitContext
from ucov.typing_env import Env, Unknown, as_type_name, static_type_of

LIB = """
package lib;

public class Conn<T> {
    public Conn() { }
    public Conn chain(int n) { return this; }
    public Doc done() { return null; }
    public void f(int x) { }
    public void f(Doc d) { }
    public void g(T o) { }
    public int count;
}
"""

DOC = """
package lib;

public class Doc {
    public Doc() { }
    public String title() { return null; }
}
"""


def setup_env(body_vars=None):
    table = build_symbol_table(
        [parse_unit(LIB, "Conn.java"), parse_unit(DOC, "Doc.java")]
    )
    unit = parse_unit("package app; import lib.Conn; import lib.Doc; class X { }", "X.java")
    env = Env(table, UnitContext.for_unit(table, unit), this_type="app.X")
    for name, t in (body_vars or {}).items():
        env.declare(name, t)
    return table, env


def expr_of(src: str):
    unit = parse_unit(f"class W {{ void w() {{ Object o = {src}; }} }}", "W.java")
    return unit.types[0].members[0].body.statements[0].init


def type_of(src: str, body_vars=None):
    table, env = setup_env(body_vars)
    return static_type_of(expr_of(src), env, table)


def test_literal_types():
    assert type_of("42") == "int"
    assert type_of("true") == "boolean"
    assert type_of('"hi"') == "java.lang.String"
    assert type_of("null") is Unknown


def test_variable_and_new_types():
    assert type_of("c", {"c": "lib.Conn"}) == "lib.Conn"
    assert type_of("new Conn()") == "lib.Conn"
    assert type_of("nowhere") is Unknown


def test_fluent_chain_type():
    assert type_of("c.chain(1).chain(2).done()", {"c": "lib.Conn"}) == "lib.Doc"
    # title()'s return type is an undeclared external; it erases to its raw name
    assert type_of("c.chain(1).done().title()", {"c": "lib.Conn"}) == "String"


def test_field_and_cast_types():
    assert type_of("c.count", {"c": "lib.Conn"}) == "int"
    assert type_of("(Doc) x", {"x": Unknown}) == "lib.Doc"
    assert type_of("x == null", {"x": Unknown}) == "boolean"


def test_as_type_name_respects_shadowing():
    table, env = setup_env()
    assert as_type_name(expr_of("Conn"), env) == "lib.Conn"
    env.declare("Conn", "lib.Doc")  # shadowed by a variable
    assert as_type_name(expr_of("Conn"), env) is None
    assert as_type_name(expr_of("c.f"), env) is None


def test_resolution_by_argument_type():
    table, _ = setup_env()
    res = table.resolve_method("lib.Conn", "f", ["int"])
    assert res.status is ResolutionStatus.RESOLVED
    assert res.member.signature == "f(int)"
    res = table.resolve_method("lib.Conn", "f", ["lib.Doc"])
    assert res.member.signature == "f(lib.Doc)"


def test_unknown_argument_is_ambiguous_but_deterministic():
    table, _ = setup_env()
    res = table.resolve_method("lib.Conn", "f", [Unknown])
    assert res.status is ResolutionStatus.AMBIGUOUS
    # deterministic lexicographic tie-break
    assert res.member.signature == "f(int)"


def test_root_type_parameter_accepts_anything():
    table, _ = setup_env()
    res = table.resolve_method("lib.Conn", "g", ["lib.Doc"])
    assert res.status is ResolutionStatus.RESOLVED
    assert res.member.signature == "g(java.lang.Object)"


def test_unresolved_method_and_arity_mismatch():
    table, _ = setup_env()
    assert table.resolve_method("lib.Conn", "nope", []).status is ResolutionStatus.UNRESOLVED
    assert table.resolve_method("lib.Conn", "f", []).status is ResolutionStatus.UNRESOLVED


def test_inherited_method_resolution_prefers_nearest_declaration():
    table = build_symbol_table(
        [
            parse_unit(
                "package p; public class A { public void m() { } public void only() { } }",
                "A.java",
            ),
            parse_unit("package p; public class B extends A { public void m() { } }", "B.java"),
        ]
    )
    res = table.resolve_method("p.B", "m", [])
    assert res.status is ResolutionStatus.RESOLVED
    assert res.member.declaring == "p.B"
    res = table.resolve_method("p.B", "only", [])
    assert res.member.declaring == "p.A"


def test_constructor_resolution():
    table = build_symbol_table(
        [
            parse_unit(
                "package p; public class A { public A() { } public A(int x) { } }",
                "A.java",
            )
        ]
    )
    assert table.resolve_constructor("p.A", []).member.signature == "A()"
    assert table.resolve_constructor("p.A", ["int"]).member.signature == "A(int)"
    assert (
        table.resolve_constructor("p.A", ["int", "int"]).status
        is ResolutionStatus.UNRESOLVED
    )
