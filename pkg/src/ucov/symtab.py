"""Symbol tables, type-name resolution, signature erasure, and method lookup.

A SymbolTable maps fully qualified names to resolved type information.
Client tables are built as overlays over a library table (the ``base``),
so client code can reference library types without them being re-declared.

Erased signatures identify members: type arguments are dropped and type
parameters are replaced by the root reference type, so ``add(E)`` and
``add(T)`` both erase to ``add(java.lang.Object)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from . import nodes as n
from .errors import CyclicHierarchy, DuplicateSymbol

ROOT_TYPE = "java.lang.Object"

PRIMITIVES = frozenset(
    {"int", "long", "short", "byte", "double", "float", "boolean", "char", "void"}
)


@dataclass(frozen=True)
class MemberInfo:
    declaring: str  # FQN of the declaring type
    kind: n.MemberKind
    name: str
    modifiers: frozenset[str]
    signature: Optional[str]  # erased; None for fields
    param_types: tuple[str, ...]  # erased type names
    return_type: Optional[str]  # erased; "void" for void methods; None otherwise
    field_type: Optional[str]
    location: Optional[n.Location] = None
    synthesized: bool = False

    @property
    def fqn(self) -> str:
        return f"{self.declaring}.{self.name}"

    def visibility(self) -> str:
        for v in ("public", "protected", "private"):
            if v in self.modifiers:
                return v
        return "packagePrivate"


@dataclass
class TypeInfo:
    fqn: str
    kind: n.TypeKind
    modifiers: frozenset[str]
    type_params: tuple[str, ...]
    supertypes: tuple[str, ...]  # direct, resolved FQNs (raw names when external)
    external_supertypes: frozenset[str]
    members: tuple[MemberInfo, ...]
    enclosing: Optional[str] = None  # FQN of the enclosing type, if nested
    location: Optional[n.Location] = None

    def visibility(self) -> str:
        for v in ("public", "protected", "private"):
            if v in self.modifiers:
                return v
        return "packagePrivate"


class ResolutionStatus(Enum):
    RESOLVED = "Resolved"
    AMBIGUOUS = "Ambiguous"
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class MethodResolution:
    status: ResolutionStatus
    member: Optional[MemberInfo] = None


class SymbolTable:
    """Immutable-after-build table of types, optionally layered over a base."""

    def __init__(self, base: Optional["SymbolTable"] = None):
        self.types: dict[str, TypeInfo] = {}
        self.base = base

    # -- lookup -----------------------------------------------------------

    def lookup_type(self, fqn: str) -> Optional[TypeInfo]:
        info = self.types.get(fqn)
        if info is None and self.base is not None:
            return self.base.lookup_type(fqn)
        return info

    def own_types(self) -> Iterator[TypeInfo]:
        return iter(self.types.values())

    def all_types(self) -> Iterator[TypeInfo]:
        yield from self.types.values()
        if self.base is not None:
            yield from self.base.all_types()

    def supertype_closure(self, fqn: str, include_self: bool = True) -> list[str]:
        """BFS over known supertypes, duplicate-free, nearest first."""
        out: list[str] = []
        seen: set[str] = set()
        queue = [fqn]
        while queue:
            current = queue.pop(0)
            if current in seen:
                continue
            seen.add(current)
            info = self.lookup_type(current)
            out.append(current)
            if info is not None:
                queue.extend(info.supertypes)
        if not include_self:
            out = out[1:]
        return out

    def is_subtype(self, sub: str, sup: str) -> bool:
        return sup in self.supertype_closure(sub)

    def members_of(self, fqn: str) -> tuple[MemberInfo, ...]:
        info = self.lookup_type(fqn)
        return info.members if info is not None else ()

    def find_field(self, receiver: str, name: str) -> Optional[MemberInfo]:
        for tfqn in self.supertype_closure(receiver):
            for m in self.members_of(tfqn):
                if m.kind is n.MemberKind.FIELD and m.name == name:
                    return m
        return None

    def super_methods(self, member: MemberInfo) -> list[MemberInfo]:
        """Methods in strict supertypes of the declaring type sharing the
        erased signature (the virtual-invocation closure)."""
        out = []
        for tfqn in self.supertype_closure(member.declaring, include_self=False):
            for m in self.members_of(tfqn):
                if m.kind is n.MemberKind.METHOD and m.signature == member.signature:
                    out.append(m)
        return out

    # -- overload resolution ------------------------------------------------

    def resolve_method(
        self, receiver: str, name: str, arg_types: list[Optional[str]]
    ) -> MethodResolution:
        """Resolve a (possibly overloaded) method deterministically.

        Candidates are arity-matching methods named ``name`` in the receiver
        or its supertypes, nearest declaring type winning per erased
        signature. Among candidates, those whose parameter types are
        compatible with the argument types are preferred (an Unknown
        argument matches anything). Remaining ties are broken by the
        lexicographically smallest erased signature and flagged Ambiguous.
        """
        candidates: list[MemberInfo] = []
        seen_sigs: set[str] = set()
        for tfqn in self.supertype_closure(receiver):
            for m in self.members_of(tfqn):
                if m.kind is not n.MemberKind.METHOD or m.name != name:
                    continue
                if len(m.param_types) != len(arg_types):
                    continue
                if m.signature in seen_sigs:
                    continue
                seen_sigs.add(m.signature or "")
                candidates.append(m)
        if not candidates:
            return MethodResolution(ResolutionStatus.UNRESOLVED)
        compatible = [m for m in candidates if self._args_compatible(m, arg_types)]
        survivors = compatible or candidates
        if len(survivors) == 1:
            return MethodResolution(ResolutionStatus.RESOLVED, survivors[0])
        chosen = min(survivors, key=lambda m: m.signature or "")
        return MethodResolution(ResolutionStatus.AMBIGUOUS, chosen)

    def resolve_constructor(
        self, type_fqn: str, arg_types: list[Optional[str]]
    ) -> MethodResolution:
        candidates = [
            m
            for m in self.members_of(type_fqn)
            if m.kind is n.MemberKind.CONSTRUCTOR and len(m.param_types) == len(arg_types)
        ]
        if not candidates:
            return MethodResolution(ResolutionStatus.UNRESOLVED)
        compatible = [m for m in candidates if self._args_compatible(m, arg_types)]
        survivors = compatible or candidates
        if len(survivors) == 1:
            return MethodResolution(ResolutionStatus.RESOLVED, survivors[0])
        chosen = min(survivors, key=lambda m: m.signature or "")
        return MethodResolution(ResolutionStatus.AMBIGUOUS, chosen)

    def _args_compatible(self, m: MemberInfo, arg_types: list[Optional[str]]) -> bool:
        for param, arg in zip(m.param_types, arg_types):
            if arg is None:  # Unknown matches anything
                continue
            if arg == param or param == ROOT_TYPE:
                continue
            if param in self.supertype_closure(arg):
                continue
            return False
        return True


# ---------------------------------------------------------------------------
# Name resolution context
# ---------------------------------------------------------------------------


@dataclass
class UnitContext:
    """Import/package scope of one source unit, used to resolve type names."""

    table: SymbolTable
    package: str
    single_imports: dict[str, str] = field(default_factory=dict)
    on_demand_imports: list[str] = field(default_factory=list)

    @classmethod
    def for_unit(cls, table: SymbolTable, unit: n.SourceUnit) -> "UnitContext":
        singles: dict[str, str] = {}
        on_demand: list[str] = []
        for imp in unit.imports:
            if imp.on_demand:
                on_demand.append(imp.qname)
            else:
                singles[imp.qname.split(".")[-1]] = imp.qname
        return cls(table, unit.package_name, singles, on_demand)

    def resolve_type_name(
        self,
        name: str,
        enclosing: tuple[str, ...] = (),
        type_params: frozenset[str] = frozenset(),
    ) -> tuple[str, bool]:
        """Resolve a (possibly dotted) type name to (fqn_or_raw, known).

        ``enclosing`` is the chain of enclosing type FQNs, innermost last.
        Type parameters in scope resolve to the root reference type.
        """
        table = self.table
        if "." in name:
            if table.lookup_type(name) is not None:
                return name, True
            if self.package:
                qualified = f"{self.package}.{name}"
                if table.lookup_type(qualified) is not None:
                    return qualified, True
            head, rest = name.split(".", 1)
            head_fqn, known = self.resolve_type_name(head, enclosing, type_params)
            if known:
                nested = f"{head_fqn}.{rest}"
                if table.lookup_type(nested) is not None:
                    return nested, True
            return name, False
        if name in type_params:
            return ROOT_TYPE, table.lookup_type(ROOT_TYPE) is not None
        for outer in reversed(enclosing):
            if outer.split(".")[-1] == name:
                return outer, True
            nested = f"{outer}.{name}"
            if table.lookup_type(nested) is not None:
                return nested, True
        same_pkg = f"{self.package}.{name}" if self.package else name
        if table.lookup_type(same_pkg) is not None:
            return same_pkg, True
        if name in self.single_imports:
            imported = self.single_imports[name]
            return imported, table.lookup_type(imported) is not None
        for pkg in self.on_demand_imports:
            candidate = f"{pkg}.{name}"
            if table.lookup_type(candidate) is not None:
                return candidate, True
        return name, False

    def erase(
        self,
        ref: n.TypeRef,
        enclosing: tuple[str, ...] = (),
        type_params: frozenset[str] = frozenset(),
    ) -> str:
        """Erased type name of a reference: type args dropped, type
        parameters replaced by the root reference type."""
        if ref.name in PRIMITIVES:
            base = ref.name
        else:
            base, _ = self.resolve_type_name(ref.name, enclosing, type_params)
        return base + "[]" * ref.array_dims


# ---------------------------------------------------------------------------
# Table construction
# ---------------------------------------------------------------------------


@dataclass
class _PendingType:
    decl: n.TypeDecl
    fqn: str
    ctx_unit: n.SourceUnit
    enclosing: tuple[str, ...]
    type_params: frozenset[str]


def build_symbol_table(
    units: list[n.SourceUnit], base: Optional[SymbolTable] = None
) -> SymbolTable:
    """Build a resolved SymbolTable from parsed units.

    Classes declaring no constructor receive a synthesized public zero-arg
    constructor. Unknown supertypes are kept by raw name and flagged
    external. Raises DuplicateSymbol on FQN/signature collisions and
    CyclicHierarchy on supertype cycles.
    """
    table = SymbolTable(base)
    pending: list[_PendingType] = []

    def register(decl: n.TypeDecl, unit: n.SourceUnit, enclosing: tuple[str, ...],
                 params: frozenset[str]) -> None:
        if enclosing:
            fqn = f"{enclosing[-1]}.{decl.simple_name}"
        elif unit.package_name:
            fqn = f"{unit.package_name}.{decl.simple_name}"
        else:
            fqn = decl.simple_name
        if fqn in table.types:
            raise DuplicateSymbol(f"type {fqn} declared more than once")
        table.types[fqn] = TypeInfo(
            fqn=fqn,
            kind=decl.kind,
            modifiers=frozenset(decl.modifiers),
            type_params=tuple(decl.type_params),
            supertypes=(),
            external_supertypes=frozenset(),
            members=(),
            enclosing=enclosing[-1] if enclosing else None,
            location=decl.location,
        )
        all_params = params | frozenset(decl.type_params)
        pending.append(_PendingType(decl, fqn, unit, enclosing, all_params))
        for inner in decl.nested:
            register(inner, unit, enclosing + (fqn,), all_params)

    for unit in units:
        for decl in unit.types:
            register(decl, unit, (), frozenset())

    contexts: dict[str, UnitContext] = {}
    for p in pending:
        if p.ctx_unit.path not in contexts:
            contexts[p.ctx_unit.path] = UnitContext.for_unit(table, p.ctx_unit)

    for p in pending:
        ctx = contexts[p.ctx_unit.path]
        scope = p.enclosing + (p.fqn,)
        supertypes: list[str] = []
        externals: set[str] = set()
        for ref in p.decl.extends_refs + p.decl.implements_refs:
            resolved, known = ctx.resolve_type_name(ref.name, scope, p.type_params)
            supertypes.append(resolved)
            if not known:
                externals.add(resolved)
        members = _build_members(p, ctx, scope)
        info = table.types[p.fqn]
        table.types[p.fqn] = TypeInfo(
            fqn=info.fqn,
            kind=info.kind,
            modifiers=info.modifiers,
            type_params=info.type_params,
            supertypes=tuple(supertypes),
            external_supertypes=frozenset(externals),
            members=members,
            enclosing=info.enclosing,
            location=info.location,
        )

    _check_acyclic(table)
    return table


def _build_members(
    p: _PendingType, ctx: UnitContext, scope: tuple[str, ...]
) -> tuple[MemberInfo, ...]:
    decl = p.decl
    out: list[MemberInfo] = []
    seen: set[tuple[str, str]] = set()
    in_interface = decl.kind is n.TypeKind.INTERFACE

    def normalize(member: n.MemberDecl) -> frozenset[str]:
        mods = set(member.modifiers)
        if in_interface:
            if not mods & n.VISIBILITY_MODIFIERS:
                mods.add("public")
            if member.kind is n.MemberKind.FIELD:
                mods.update(("static", "final"))
            elif member.body is None and "static" not in mods and "default" not in mods:
                mods.add("abstract")
        elif member.kind is n.MemberKind.METHOD and member.body is None:
            mods.add("abstract")
        return frozenset(mods)

    for member in decl.members:
        mods = normalize(member)
        if member.kind is n.MemberKind.FIELD:
            info = MemberInfo(
                declaring=p.fqn,
                kind=member.kind,
                name=member.name,
                modifiers=mods,
                signature=None,
                param_types=(),
                return_type=None,
                field_type=ctx.erase(member.field_type, scope, p.type_params),
                location=member.location,
            )
            key = (member.name, "")
        else:
            param_types = tuple(
                ctx.erase(prm.type_ref, scope, p.type_params) for prm in member.params
            )
            signature = f"{member.name}({','.join(param_types)})"
            if member.kind is n.MemberKind.CONSTRUCTOR:
                return_type = None
            elif member.is_void:
                return_type = "void"
            else:
                return_type = ctx.erase(member.return_type, scope, p.type_params)
            info = MemberInfo(
                declaring=p.fqn,
                kind=member.kind,
                name=member.name,
                modifiers=mods,
                signature=signature,
                param_types=param_types,
                return_type=return_type,
                field_type=None,
                location=member.location,
            )
            key = (member.name, signature)
        if key in seen:
            raise DuplicateSymbol(
                f"member {p.fqn}.{member.name} with signature {key[1] or '(field)'} "
                "declared more than once"
            )
        seen.add(key)
        out.append(info)

    if decl.kind is n.TypeKind.CLASS and not any(
        m.kind is n.MemberKind.CONSTRUCTOR for m in out
    ):
        out.append(
            MemberInfo(
                declaring=p.fqn,
                kind=n.MemberKind.CONSTRUCTOR,
                name=decl.simple_name,
                modifiers=frozenset({"public"}),
                signature=f"{decl.simple_name}()",
                param_types=(),
                return_type=None,
                field_type=None,
                location=decl.location,
                synthesized=True,
            )
        )
    return tuple(out)


def _check_acyclic(table: SymbolTable) -> None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[str, int] = {}

    def visit(fqn: str, path: list[str]) -> None:
        state = color.get(fqn, WHITE)
        if state == BLACK:
            return
        if state == GRAY:
            cycle = " -> ".join(path + [fqn])
            raise CyclicHierarchy(f"supertype cycle: {cycle}")
        color[fqn] = GRAY
        info = table.types.get(fqn)
        if info is not None:
            for sup in info.supertypes:
                if table.lookup_type(sup) is not None:
                    visit(sup, path + [fqn])
        color[fqn] = BLACK

    for fqn in table.types:
        visit(fqn, [])
