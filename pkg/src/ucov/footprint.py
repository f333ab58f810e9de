"""Footprint extraction: locating every actual use of an API in client code.

The extractor walks resolved client ASTs and emits ⟨symbol, use, location⟩
triples for every interaction with a symbol of the governing usage model.
Anything that cannot be resolved, or that is syntactically present but not
legal under the model (e.g. extending a final class), becomes a diagnostic
rather than a triple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from . import nodes as n
from .errors import ModelMismatch, ParseError
from .model import Symbol, UsageModel, UseKind
from .parser import parse_unit
from .symtab import (
    MemberInfo,
    ResolutionStatus,
    SymbolTable,
    UnitContext,
    build_symbol_table,
)
from .typing_env import Env, Unknown, as_type_name, static_type_of


class DiagnosticKind(Enum):
    UNRESOLVED = "Unresolved"
    AMBIGUOUS = "Ambiguous"
    ILLEGAL_USE = "IllegalUse"
    PARSE_ERROR = "ParseError"


@dataclass(frozen=True)
class Diagnostic:
    location: n.Location
    kind: DiagnosticKind
    message: str


@dataclass(frozen=True)
class UseTriple:
    symbol: Symbol
    use: UseKind
    location: n.Location

    @property
    def pair(self) -> tuple[str, Optional[str], UseKind]:
        return (self.symbol.fqn, self.symbol.signature, self.use)

    def sort_key(self):
        return (
            self.symbol.fqn,
            self.symbol.signature or "",
            self.use.value,
            self.location,
        )


@dataclass
class Footprint:
    label: str
    library: str
    triples: set[UseTriple] = field(default_factory=set)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def unique_uses(self) -> set[tuple[str, Optional[str], UseKind]]:
        return {t.pair for t in self.triples}

    @property
    def total_uses(self) -> int:
        return len(self.triples)


def merge(f1: Footprint, f2: Footprint, label: Optional[str] = None) -> Footprint:
    """Set union of two footprints governed by the same model."""
    if f1.library != f2.library:
        raise ModelMismatch(f"cannot merge footprints of {f1.library} and {f2.library}")
    return Footprint(
        label=label if label is not None else f"{f1.label}+{f2.label}",
        library=f1.library,
        triples=f1.triples | f2.triples,
        diagnostics=f1.diagnostics + f2.diagnostics,
    )


def diff(f1: Footprint, f2: Footprint, label: Optional[str] = None) -> Footprint:
    """Triples of f1 whose (symbol, use) pair does not occur in f2.

    The comparison is location-insensitive: it is a difference of unique
    uses, not of individual use sites.
    """
    if f1.library != f2.library:
        raise ModelMismatch(f"cannot diff footprints of {f1.library} and {f2.library}")
    excluded = f2.unique_uses
    return Footprint(
        label=label if label is not None else f"{f1.label}-{f2.label}",
        library=f1.library,
        triples={t for t in f1.triples if t.pair not in excluded},
        diagnostics=list(f1.diagnostics),
    )


# ---------------------------------------------------------------------------
# Extraction
# ---------------------------------------------------------------------------


def extract_uses(
    client_units: list[n.SourceUnit],
    model: UsageModel,
    table: Optional[SymbolTable] = None,
    label: str = "client",
) -> Footprint:
    """Extract the footprint of client units against a usage model.

    ``table``, when given, must be a client symbol table layered over the
    library's; otherwise one is built from the units on the fly.
    """
    if table is None:
        table = build_symbol_table(client_units, base=model.table)
    extractor = _Extractor(model, table)
    for unit in client_units:
        extractor.visit_unit(unit)
    return Footprint(
        label=label,
        library=model.library_name,
        triples=extractor.triples,
        diagnostics=extractor.diagnostics,
    )


def footprint_of_corpus(
    groups: dict[str, list[Union[str, Path]]],
    model: UsageModel,
    lenient: bool = True,
) -> dict[str, Footprint]:
    """One footprint per labeled group of source roots.

    In lenient mode files that fail to parse are skipped with a diagnostic;
    in strict mode the ParseError propagates.
    """
    if not groups:
        raise ValueError("at least one labeled group is required")
    out: dict[str, Footprint] = {}
    for label, roots in groups.items():
        units: list[n.SourceUnit] = []
        diagnostics: list[Diagnostic] = []
        for path in collect_source_files(roots):
            try:
                units.append(parse_unit(path.read_text(encoding="utf-8"), str(path)))
            except ParseError as exc:
                if not lenient:
                    raise
                diagnostics.append(
                    Diagnostic(
                        n.Location(exc.file, exc.line, exc.column),
                        DiagnosticKind.PARSE_ERROR,
                        exc.reason,
                    )
                )
        fp = extract_uses(units, model, label=label)
        fp.diagnostics = diagnostics + fp.diagnostics
        out[label] = fp
    return out


def collect_source_files(roots: list[Union[str, Path]]) -> list[Path]:
    files: list[Path] = []
    for root in roots:
        root = Path(root)
        if root.is_file():
            files.append(root)
        else:
            files.extend(sorted(root.rglob("*.java")))
    return files


class _Extractor:
    def __init__(self, model: UsageModel, table: SymbolTable):
        self.model = model
        self.table = table
        self.lib_table = model.table
        self.triples: set[UseTriple] = set()
        self.diagnostics: list[Diagnostic] = []
        self.return_type_stack: list[Optional[str]] = []

    # -- bookkeeping -------------------------------------------------------

    def diag(self, loc: n.Location, kind: DiagnosticKind, message: str) -> None:
        self.diagnostics.append(Diagnostic(loc, kind, message))

    def api_type(self, fqn: str) -> Optional[Symbol]:
        return self.model.symbol_for(fqn, None)

    def api_member(self, member: MemberInfo) -> Optional[Symbol]:
        return self.model.symbol_for(member.fqn, member.signature)

    def is_library_type(self, fqn: str) -> bool:
        return self.lib_table.lookup_type(fqn) is not None

    def emit(self, symbol: Optional[Symbol], use: UseKind, loc: n.Location) -> None:
        if symbol is None:
            return
        legal = self.model.entries.get(symbol)
        if legal is not None and use in legal:
            self.triples.add(UseTriple(symbol, use, loc))
        else:
            self.diag(
                loc,
                DiagnosticKind.ILLEGAL_USE,
                f"{use.value} is not a legal use of {symbol}",
            )

    def emit_member_use(self, member: MemberInfo, use: UseKind, loc: n.Location) -> None:
        sym = self.api_member(member)
        if sym is not None:
            self.emit(sym, use, loc)
        elif self.is_library_type(member.declaring):
            self.diag(
                loc,
                DiagnosticKind.ILLEGAL_USE,
                f"{use.value} of non-exported symbol {member.fqn}",
            )

    # -- declarations --------------------------------------------------------

    def visit_unit(self, unit: n.SourceUnit) -> None:
        ctx = UnitContext.for_unit(self.table, unit)
        for decl in unit.types:
            fqn = (
                f"{unit.package_name}.{decl.simple_name}"
                if unit.package_name
                else decl.simple_name
            )
            self.visit_type(decl, fqn, ctx, (), frozenset())

    def visit_type(
        self,
        decl: n.TypeDecl,
        fqn: str,
        ctx: UnitContext,
        enclosing: tuple[str, ...],
        outer_params: frozenset[str],
    ) -> None:
        scope = enclosing + (fqn,)
        params = outer_params | frozenset(decl.type_params)
        self._heritage_uses(decl, ctx, scope, params)
        info = self.table.lookup_type(fqn)
        if info is not None:
            self._overriding_uses(info)
            self._implicit_super_constructors(info)
        env = Env(self.table, ctx, this_type=fqn, enclosing=scope, type_params=params)
        for member in decl.members:
            self._member_type_references(member, env)
            self._visit_member_body(member, env)
        for inner in decl.nested:
            self.visit_type(inner, f"{fqn}.{inner.simple_name}", ctx, scope, params)

    def _heritage_uses(
        self,
        decl: n.TypeDecl,
        ctx: UnitContext,
        scope: tuple[str, ...],
        params: frozenset[str],
    ) -> None:
        def heritage(ref: n.TypeRef, implements_clause: bool) -> None:
            resolved, known = ctx.resolve_type_name(ref.name, scope, params)
            for arg in ref.type_args:
                self._type_reference(arg, scope, params, ctx)
            if not known:
                return
            target = self.api_type(resolved)
            target_info = self.table.lookup_type(resolved)
            if target is None:
                if self.is_library_type(resolved):
                    self.diag(
                        ref.location,
                        DiagnosticKind.ILLEGAL_USE,
                        f"extension of non-exported type {resolved}",
                    )
                return
            assert ref.location is not None
            if target_info is not None and target_info.kind is n.TypeKind.INTERFACE:
                if decl.kind is n.TypeKind.INTERFACE:
                    self.emit(target, UseKind.INTERFACE_EXTENSION, ref.location)
                else:
                    self.emit(target, UseKind.IMPLEMENTATION, ref.location)
            else:
                self.emit(target, UseKind.INHERITANCE, ref.location)

        for ref in decl.extends_refs:
            heritage(ref, implements_clause=False)
        for ref in decl.implements_refs:
            heritage(ref, implements_clause=True)

    def _overriding_uses(self, info) -> None:
        for member in info.members:
            if member.kind is not n.MemberKind.METHOD or "static" in member.modifiers:
                continue
            for sm in self.table.super_methods(member):
                if "static" in sm.modifiers:
                    continue
                if not self.is_library_type(sm.declaring):
                    continue
                loc = member.location or info.location
                self.emit_member_use(sm, UseKind.OVERRIDING, loc)

    def _implicit_super_constructors(self, info) -> None:
        # An explicitly declared constructor of a client subclass implicitly
        # invokes the API superclass's zero-arg constructor.
        superclass = None
        for sup in info.supertypes:
            sup_info = self.table.lookup_type(sup)
            if sup_info is not None and sup_info.kind is n.TypeKind.CLASS:
                superclass = sup_info
                break
        if superclass is None or not self.is_library_type(superclass.fqn):
            return
        zero_arg = next(
            (
                m
                for m in superclass.members
                if m.kind is n.MemberKind.CONSTRUCTOR and not m.param_types
            ),
            None,
        )
        if zero_arg is None:
            return
        for member in info.members:
            if member.kind is n.MemberKind.CONSTRUCTOR and not member.synthesized:
                loc = member.location or info.location
                self.emit_member_use(zero_arg, UseKind.CONSTRUCTOR_INVOCATION, loc)

    def _member_type_references(self, member: n.MemberDecl, env: Env) -> None:
        refs: list[n.TypeRef] = []
        if member.field_type is not None:
            refs.append(member.field_type)
        if member.return_type is not None:
            refs.append(member.return_type)
        refs.extend(p.type_ref for p in member.params)
        refs.extend(member.throws_refs)
        for ref in refs:
            self._type_reference(ref, env.enclosing, env.type_params, env.ctx)

    def _type_reference(
        self,
        ref: n.TypeRef,
        scope: tuple[str, ...],
        params: frozenset[str],
        ctx: UnitContext,
    ) -> None:
        if ref.name and ref.name not in params:
            resolved, known = ctx.resolve_type_name(ref.name, scope, params)
            if known:
                sym = self.api_type(resolved)
                if sym is not None and ref.location is not None:
                    self.emit(sym, UseKind.TYPE_REFERENCE, ref.location)
        for arg in ref.type_args:
            self._type_reference(arg, scope, params, ctx)

    def _visit_member_body(self, member: n.MemberDecl, type_env: Env) -> None:
        if member.kind is n.MemberKind.FIELD:
            if member.field_init is not None:
                env = type_env.child()
                expected = type_env.erase(member.field_type) if member.field_type else None
                self.visit_expr(member.field_init, env, expected=expected)
            return
        if member.body is None:
            return
        env = type_env.child()
        for p in member.params:
            env.declare(p.name, self._declared_type(p.type_ref, env))
        if member.kind is n.MemberKind.METHOD and member.return_type is not None:
            self.return_type_stack.append(env.erase(member.return_type))
        else:
            self.return_type_stack.append(None)
        self.visit_block(member.body, env)
        self.return_type_stack.pop()

    def _declared_type(self, ref: n.TypeRef, env: Env) -> Optional[str]:
        if not ref.name:
            return Unknown
        erased = env.erase(ref)
        base = erased.rstrip("[]")
        if base in ("int", "long", "short", "byte", "double", "float", "boolean", "char"):
            return erased
        if self.table.lookup_type(base) is not None:
            return erased
        return Unknown

    # -- statements ------------------------------------------------------------

    def visit_block(self, block: n.Block, env: Env) -> None:
        inner = env.child()
        for stmt in block.statements:
            self.visit_stmt(stmt, inner)

    def visit_stmt(self, stmt: n.Stmt, env: Env) -> None:
        if isinstance(stmt, n.Block):
            self.visit_block(stmt, env)
        elif isinstance(stmt, n.LocalDecl):
            self._type_reference(stmt.type_ref, env.enclosing, env.type_params, env.ctx)
            declared = self._declared_type(stmt.type_ref, env)
            env.declare(stmt.name, declared)
            if stmt.init is not None:
                self.visit_expr(stmt.init, env, expected=env.erase(stmt.type_ref))
        elif isinstance(stmt, n.ExprStmt):
            self.visit_expr(stmt.expr, env)
        elif isinstance(stmt, n.If):
            self.visit_expr(stmt.cond, env)
            self.visit_stmt(stmt.then, env.child())
            if stmt.orelse is not None:
                self.visit_stmt(stmt.orelse, env.child())
        elif isinstance(stmt, n.While):
            self.visit_expr(stmt.cond, env)
            self.visit_stmt(stmt.body, env.child())
        elif isinstance(stmt, n.For):
            inner = env.child()
            if stmt.init is not None:
                self.visit_stmt(stmt.init, inner)
            if stmt.cond is not None:
                self.visit_expr(stmt.cond, inner)
            if stmt.update is not None:
                self.visit_expr(stmt.update, inner)
            self.visit_stmt(stmt.body, inner.child())
        elif isinstance(stmt, n.Return):
            if stmt.expr is not None:
                expected = self.return_type_stack[-1] if self.return_type_stack else None
                self.visit_expr(stmt.expr, env, expected=expected)
        elif isinstance(stmt, n.Throw):
            self.visit_expr(stmt.expr, env)
        elif isinstance(stmt, n.Try):
            self.visit_block(stmt.body, env)
            for catch in stmt.catches:
                self._type_reference(
                    catch.param_type, env.enclosing, env.type_params, env.ctx
                )
                inner = env.child()
                inner.declare(catch.name, self._declared_type(catch.param_type, inner))
                self.visit_block(catch.body, inner)
            if stmt.finally_block is not None:
                self.visit_block(stmt.finally_block, env)

    # -- expressions --------------------------------------------------------------

    def visit_expr(
        self,
        expr: n.Expr,
        env: Env,
        expected: Optional[str] = None,
        assign_target: bool = False,
    ) -> None:
        if isinstance(expr, (n.Literal, n.This)):
            return
        if isinstance(expr, n.Name):
            self._name_field_use(expr, env, assign_target)
        elif isinstance(expr, n.FieldAccess):
            self._field_access_use(expr, env, assign_target)
        elif isinstance(expr, n.MethodCall):
            self._method_call(expr, env)
        elif isinstance(expr, n.New):
            self._new_expr(expr, env)
        elif isinstance(expr, n.Assign):
            self.visit_expr(expr.target, env, assign_target=True)
            target_type = static_type_of(expr.target, env, self.table)
            self.visit_expr(expr.value, env, expected=target_type)
        elif isinstance(expr, n.Binary):
            self.visit_expr(expr.left, env)
            self.visit_expr(expr.right, env)
        elif isinstance(expr, n.Unary):
            self.visit_expr(expr.operand, env)
        elif isinstance(expr, n.Cast):
            self._type_reference(expr.type_ref, env.enclosing, env.type_params, env.ctx)
            self.visit_expr(expr.expr, env)
        elif isinstance(expr, n.Lambda):
            self._lambda(expr, env, expected)

    def _name_field_use(self, expr: n.Name, env: Env, assign_target: bool) -> None:
        declared, _ = env.lookup(expr.identifier)
        if declared or env.this_type is None:
            return
        member = self.table.find_field(env.this_type, expr.identifier)
        if member is not None and self.is_library_type(member.declaring):
            use = UseKind.FIELD_WRITE if assign_target else UseKind.FIELD_READ
            self.emit_member_use(member, use, expr.location)

    def _field_access_use(self, expr: n.FieldAccess, env: Env, assign_target: bool) -> None:
        receiver_type = static_type_of(expr.receiver, env, self.table)
        type_name = None
        if receiver_type is None:
            type_name = as_type_name(expr.receiver, env)
            receiver_type = type_name
        if type_name is None:
            self.visit_expr(expr.receiver, env)
        if receiver_type is None:
            return
        member = self.table.find_field(receiver_type, expr.name)
        if member is None:
            if self.is_library_type(receiver_type):
                self.diag(
                    expr.location,
                    DiagnosticKind.UNRESOLVED,
                    f"no field {expr.name} on {receiver_type}",
                )
            return
        if self.is_library_type(member.declaring):
            use = UseKind.FIELD_WRITE if assign_target else UseKind.FIELD_READ
            self.emit_member_use(member, use, expr.location)

    def _method_call(self, call: n.MethodCall, env: Env) -> None:
        receiver_type: Optional[str]
        static_receiver = False
        if call.receiver is None:
            receiver_type = env.this_type
        else:
            type_name = as_type_name(call.receiver, env)
            if type_name is not None:
                receiver_type = type_name
                static_receiver = True
            else:
                receiver_type = static_type_of(call.receiver, env, self.table)
                self.visit_expr(call.receiver, env)
        arg_types = [static_type_of(a, env, self.table) for a in call.args]
        if receiver_type is None:
            self.diag(
                call.location,
                DiagnosticKind.UNRESOLVED,
                f"cannot resolve receiver of {call.name}(...)",
            )
            self._visit_args(call.args, env, None)
            return
        res = self.table.resolve_method(receiver_type, call.name, arg_types)
        if res.status is ResolutionStatus.UNRESOLVED or res.member is None:
            if self._worth_diagnosing(receiver_type):
                self.diag(
                    call.location,
                    DiagnosticKind.UNRESOLVED,
                    f"cannot resolve method {call.name} on {receiver_type}",
                )
            self._visit_args(call.args, env, None)
            return
        if res.status is ResolutionStatus.AMBIGUOUS:
            self.diag(
                call.location,
                DiagnosticKind.AMBIGUOUS,
                f"ambiguous call to {call.name} on {receiver_type}; "
                f"chose {res.member.signature}",
            )
        member = res.member
        if "static" in member.modifiers:
            self.emit_member_use(member, UseKind.STATIC_INVOCATION, call.location)
        else:
            self.emit_member_use(member, UseKind.METHOD_INVOCATION, call.location)
            # Virtual-invocation closure: every super-method sharing the
            # erased signature is covered by the same call site.
            for sm in self.table.super_methods(member):
                if "static" in sm.modifiers:
                    continue
                if self.is_library_type(sm.declaring):
                    self.emit_member_use(sm, UseKind.METHOD_INVOCATION, call.location)
        self._visit_args(call.args, env, member)

    def _worth_diagnosing(self, receiver_type: str) -> bool:
        # Calls on primitives or unknown externals are not diagnosable resolution
        # failures worth reporting individually; everything else is.
        return self.table.lookup_type(receiver_type) is not None

    def _visit_args(
        self, args: list[n.Expr], env: Env, member: Optional[MemberInfo]
    ) -> None:
        for i, arg in enumerate(args):
            expected = None
            if member is not None and i < len(member.param_types):
                expected = member.param_types[i]
            self.visit_expr(arg, env, expected=expected)

    def _new_expr(self, expr: n.New, env: Env) -> None:
        for arg_ref in expr.type_ref.type_args:
            self._type_reference(arg_ref, env.enclosing, env.type_params, env.ctx)
        resolved, known = env.resolve_type(expr.type_ref.name)
        if not known:
            self.diag(
                expr.location,
                DiagnosticKind.UNRESOLVED,
                f"cannot resolve type {expr.type_ref.name} in new expression",
            )
            self._visit_args(expr.args, env, None)
            return
        info = self.table.lookup_type(resolved)
        sym = self.api_type(resolved)
        arg_types = [static_type_of(a, env, self.table) for a in expr.args]
        ctor = self.table.resolve_constructor(resolved, arg_types)
        if expr.anon_body is not None:
            self._anonymous_class(expr, resolved, info, sym, ctor, env)
            return
        if sym is not None:
            self.emit(sym, UseKind.INSTANTIATION, expr.location)
            if ctor.member is not None:
                self.emit_member_use(
                    ctor.member, UseKind.CONSTRUCTOR_INVOCATION, expr.location
                )
            elif info is not None and info.kind is n.TypeKind.CLASS:
                self.diag(
                    expr.location,
                    DiagnosticKind.UNRESOLVED,
                    f"no matching constructor for {resolved}",
                )
        self._visit_args(expr.args, env, ctor.member)

    def _anonymous_class(self, expr, resolved, info, sym, ctor, env: Env) -> None:
        is_interface = info is not None and info.kind is n.TypeKind.INTERFACE
        if sym is not None:
            if is_interface:
                self.emit(sym, UseKind.IMPLEMENTATION, expr.location)
            else:
                self.emit(sym, UseKind.INHERITANCE, expr.location)
                if ctor.member is not None:
                    self.emit_member_use(
                        ctor.member, UseKind.CONSTRUCTOR_INVOCATION, expr.location
                    )
        self._visit_args(expr.args, env, ctor.member)
        inner = Env(
            self.table,
            env.ctx,
            this_type=resolved,
            enclosing=env.enclosing,
            type_params=env.type_params,
        )
        for member in expr.anon_body or []:
            if member.kind is n.MemberKind.METHOD:
                sig_params = tuple(inner.erase(p.type_ref) for p in member.params)
                signature = f"{member.name}({','.join(sig_params)})"
                for tfqn in self.table.supertype_closure(resolved):
                    for m in self.table.members_of(tfqn):
                        if (
                            m.kind is n.MemberKind.METHOD
                            and m.signature == signature
                            and "static" not in m.modifiers
                            and self.is_library_type(m.declaring)
                        ):
                            self.emit_member_use(m, UseKind.OVERRIDING, member.location)
            self._member_type_references(member, inner)
            self._visit_member_body(member, inner)

    def _lambda(self, expr: n.Lambda, env: Env, expected: Optional[str]) -> None:
        sam: Optional[MemberInfo] = None
        if expected is not None:
            info = self.table.lookup_type(expected)
            sym = self.api_type(expected)
            if (
                info is not None
                and info.kind is n.TypeKind.INTERFACE
                and sym is not None
            ):
                abstract = [
                    m
                    for m in info.members
                    if m.kind is n.MemberKind.METHOD and "abstract" in m.modifiers
                ]
                if len(abstract) == 1:
                    sam = abstract[0]
                    self.emit(sym, UseKind.IMPLEMENTATION, expr.location)
                    self.emit_member_use(sam, UseKind.OVERRIDING, expr.location)
        inner = env.child()
        for i, p in enumerate(expr.params):
            if p.type_ref.name:
                self._type_reference(p.type_ref, env.enclosing, env.type_params, env.ctx)
                inner.declare(p.name, self._declared_type(p.type_ref, inner))
            elif sam is not None and i < len(sam.param_types):
                inner.declare(p.name, sam.param_types[i])
            else:
                inner.declare(p.name, Unknown)
        if isinstance(expr.body, n.Block):
            self.visit_block(expr.body, inner)
        else:
            ret = sam.return_type if sam is not None else None
            self.visit_expr(expr.body, inner, expected=ret)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def footprint_to_dict(fp: Footprint) -> dict:
    uses = sorted(fp.triples, key=lambda t: t.sort_key())
    diagnostics = sorted(
        fp.diagnostics, key=lambda d: (d.location, d.kind.value, d.message)
    )
    return {
        "label": fp.label,
        "library": fp.library,
        "uses": [
            {
                "fqn": t.symbol.fqn,
                "signature": t.symbol.signature,
                "use": t.use.value,
                "file": t.location.file,
                "line": t.location.line,
                "col": t.location.column,
            }
            for t in uses
        ],
        "diagnostics": [
            {
                "kind": d.kind.value,
                "file": d.location.file,
                "line": d.location.line,
                "col": d.location.column,
                "message": d.message,
            }
            for d in diagnostics
        ],
    }


def footprint_from_dict(data: dict, model: UsageModel) -> Footprint:
    if data["library"] != model.library_name:
        raise ModelMismatch(
            f"footprint is for {data['library']!r}, model is {model.library_name!r}"
        )
    triples: set[UseTriple] = set()
    for u in data["uses"]:
        sym = model.symbol_for(u["fqn"], u["signature"])
        if sym is None:
            raise ModelMismatch(f"symbol {u['fqn']} not in model {model.library_name!r}")
        triples.add(
            UseTriple(
                sym, UseKind(u["use"]), n.Location(u["file"], u["line"], u["col"])
            )
        )
    diagnostics = [
        Diagnostic(
            n.Location(d["file"], d["line"], d["col"]),
            DiagnosticKind(d["kind"]),
            d["message"],
        )
        for d in data.get("diagnostics", [])
    ]
    return Footprint(data["label"], data["library"], triples, diagnostics)
