"""Static typing of expressions against a symbol table.

Typing is best-effort: anything that cannot be resolved is Unknown
(represented as None) rather than an error. Unknowns are recorded as
diagnostics by the footprint extractor, not here.
"""

from __future__ import annotations

from typing import Optional

from . import nodes as n
from .symtab import ResolutionStatus, SymbolTable, UnitContext

Unknown = None


class Env:
    """Lexical environment mapping in-scope names to declared type FQNs."""

    def __init__(
        self,
        table: SymbolTable,
        ctx: UnitContext,
        this_type: Optional[str] = None,
        enclosing: tuple[str, ...] = (),
        type_params: frozenset[str] = frozenset(),
        parent: Optional["Env"] = None,
    ):
        self.table = table
        self.ctx = ctx
        self.this_type = this_type
        self.enclosing = enclosing
        self.type_params = type_params
        self.parent = parent
        self.vars: dict[str, Optional[str]] = {}

    def child(self) -> "Env":
        return Env(
            self.table, self.ctx, self.this_type, self.enclosing, self.type_params, self
        )

    def declare(self, name: str, type_fqn: Optional[str]) -> None:
        self.vars[name] = type_fqn

    def lookup(self, name: str) -> tuple[bool, Optional[str]]:
        env: Optional[Env] = self
        while env is not None:
            if name in env.vars:
                return True, env.vars[name]
            env = env.parent
        return False, Unknown

    def resolve_type(self, name: str) -> tuple[str, bool]:
        return self.ctx.resolve_type_name(name, self.enclosing, self.type_params)

    def erase(self, ref: n.TypeRef) -> str:
        return self.ctx.erase(ref, self.enclosing, self.type_params)


def as_type_name(expr: n.Expr, env: Env) -> Optional[str]:
    """If the expression is a dotted name chain denoting a known type,
    return its FQN; otherwise None.

    Names shadowed by in-scope variables are never type names.
    """
    parts = _name_chain(expr)
    if parts is None:
        return None
    declared, _ = env.lookup(parts[0])
    if declared:
        return None
    fqn, known = env.resolve_type(".".join(parts))
    return fqn if known else None


def _name_chain(expr: n.Expr) -> Optional[list[str]]:
    if isinstance(expr, n.Name):
        return [expr.identifier]
    if isinstance(expr, n.FieldAccess):
        head = _name_chain(expr.receiver)
        if head is None:
            return None
        return head + [expr.name]
    return None


_LITERAL_TYPES = {
    "int": "int",
    "boolean": "boolean",
    "char": "char",
    "string": "java.lang.String",
    "null": Unknown,
}

_BOOLEAN_OPS = frozenset({"==", "!=", "<", ">", "<=", ">=", "&&", "||"})


def static_type_of(expr: n.Expr, env: Env, table: SymbolTable) -> Optional[str]:
    """Declared static type of an expression, or Unknown (None)."""
    if isinstance(expr, n.Literal):
        return _LITERAL_TYPES.get(expr.kind, Unknown)
    if isinstance(expr, n.This):
        return env.this_type
    if isinstance(expr, n.Name):
        declared, t = env.lookup(expr.identifier)
        if declared:
            return t
        if env.this_type is not None:
            f = table.find_field(env.this_type, expr.identifier)
            if f is not None:
                return f.field_type
        return Unknown
    if isinstance(expr, n.FieldAccess):
        receiver_type = static_type_of(expr.receiver, env, table)
        if receiver_type is None:
            receiver_type = as_type_name(expr.receiver, env)
        if receiver_type is None:
            return Unknown
        f = table.find_field(receiver_type, expr.name)
        return f.field_type if f is not None else Unknown
    if isinstance(expr, n.MethodCall):
        receiver_type = _receiver_type(expr, env, table)
        if receiver_type is None:
            return Unknown
        arg_types = [static_type_of(a, env, table) for a in expr.args]
        res = table.resolve_method(receiver_type, expr.name, arg_types)
        if res.status is ResolutionStatus.UNRESOLVED or res.member is None:
            return Unknown
        rt = res.member.return_type
        return Unknown if rt == "void" else rt
    if isinstance(expr, n.New):
        fqn, known = env.resolve_type(expr.type_ref.name)
        return fqn if known else Unknown
    if isinstance(expr, n.Cast):
        if expr.type_ref.name in ("int", "boolean", "char"):
            return expr.type_ref.name
        fqn, known = env.resolve_type(expr.type_ref.name)
        return fqn if known else Unknown
    if isinstance(expr, n.Assign):
        return static_type_of(expr.target, env, table)
    if isinstance(expr, n.Binary):
        if expr.op in _BOOLEAN_OPS:
            return "boolean"
        return static_type_of(expr.left, env, table)
    if isinstance(expr, n.Unary):
        if expr.op == "!":
            return "boolean"
        return static_type_of(expr.operand, env, table)
    return Unknown  # lambdas are context-typed


def _receiver_type(call: n.MethodCall, env: Env, table: SymbolTable) -> Optional[str]:
    if call.receiver is None:
        return env.this_type
    t = static_type_of(call.receiver, env, table)
    if t is not None:
        return t
    return as_type_name(call.receiver, env)
