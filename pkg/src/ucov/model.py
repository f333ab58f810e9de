"""Usage models: exported API symbols mapped to their sets of legal uses."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from . import nodes as n
from .errors import ModelMismatch
from .symtab import MemberInfo, SymbolTable, TypeInfo, build_symbol_table


class UseKind(Enum):
    TYPE_REFERENCE = "TypeReference"
    INSTANTIATION = "Instantiation"
    INHERITANCE = "Inheritance"
    IMPLEMENTATION = "Implementation"
    INTERFACE_EXTENSION = "InterfaceExtension"
    CONSTRUCTOR_INVOCATION = "ConstructorInvocation"
    METHOD_INVOCATION = "MethodInvocation"
    STATIC_INVOCATION = "StaticInvocation"
    OVERRIDING = "Overriding"
    FIELD_READ = "FieldRead"
    FIELD_WRITE = "FieldWrite"


class SymbolKind(Enum):
    CLASS = "Class"
    INTERFACE = "Interface"
    METHOD = "Method"
    CONSTRUCTOR = "Constructor"
    FIELD = "Field"


_TYPE_KINDS = frozenset({SymbolKind.CLASS, SymbolKind.INTERFACE})


@dataclass(frozen=True)
class Symbol:
    """A uniquely identified library declaration."""

    fqn: str
    kind: SymbolKind
    signature: Optional[str] = None  # erased; members only
    declaring_type: Optional[str] = None  # members only
    modifiers: frozenset[str] = frozenset()
    exported: bool = True

    def sort_key(self) -> tuple[str, str]:
        return (self.fqn, self.signature or "")

    def __str__(self) -> str:
        if self.kind in (SymbolKind.METHOD, SymbolKind.CONSTRUCTOR):
            return f"{self.declaring_type}.{self.signature}"
        return self.fqn


@dataclass
class UsageModel:
    """Map from exported symbols to their sets of legal use kinds."""

    library_name: str
    entries: dict[Symbol, frozenset[UseKind]]
    table: SymbolTable

    @property
    def legal_use_count(self) -> int:
        return sum(len(uses) for uses in self.entries.values())

    def symbol_for(self, fqn: str, signature: Optional[str]) -> Optional[Symbol]:
        return self._index().get((fqn, signature))

    def _index(self) -> dict[tuple[str, Optional[str]], Symbol]:
        if not hasattr(self, "_idx"):
            self._idx = {(s.fqn, s.signature): s for s in self.entries}
        return self._idx


# ---------------------------------------------------------------------------
# Export rules
# ---------------------------------------------------------------------------


def is_effectively_extensible_info(info: TypeInfo, table: SymbolTable) -> bool:
    if "final" in info.modifiers or "sealed" in info.modifiers:
        return False
    if info.kind is n.TypeKind.CLASS:
        return any(
            m.kind is n.MemberKind.CONSTRUCTOR and m.visibility() in ("public", "protected")
            for m in info.members
        )
    return True


def _type_exported(info: TypeInfo, table: SymbolTable) -> bool:
    vis = info.visibility()
    if info.enclosing is None:
        return vis == "public"
    outer = table.lookup_type(info.enclosing)
    if outer is None or not _type_exported(outer, table):
        return False
    if vis == "public":
        return True
    if vis == "protected":
        return is_effectively_extensible_info(outer, table)
    return False


def _member_exported(member: MemberInfo, table: SymbolTable) -> bool:
    outer = table.lookup_type(member.declaring)
    if outer is None or not _type_exported(outer, table):
        return False
    vis = member.visibility()
    if vis == "public":
        return True
    if vis == "protected":
        return is_effectively_extensible_info(outer, table)
    return False


def _symbol_for_type(info: TypeInfo, table: SymbolTable) -> Symbol:
    kind = SymbolKind.CLASS if info.kind is n.TypeKind.CLASS else SymbolKind.INTERFACE
    return Symbol(
        fqn=info.fqn,
        kind=kind,
        modifiers=info.modifiers,
        exported=_type_exported(info, table),
    )


_MEMBER_SYMBOL_KINDS = {
    n.MemberKind.METHOD: SymbolKind.METHOD,
    n.MemberKind.CONSTRUCTOR: SymbolKind.CONSTRUCTOR,
    n.MemberKind.FIELD: SymbolKind.FIELD,
}


def _symbol_for_member(member: MemberInfo, table: SymbolTable) -> Symbol:
    return Symbol(
        fqn=member.fqn,
        kind=_MEMBER_SYMBOL_KINDS[member.kind],
        signature=member.signature,
        declaring_type=member.declaring,
        modifiers=member.modifiers,
        exported=_member_exported(member, table),
    )


def is_exported(sym: Symbol, table: SymbolTable) -> bool:
    """Whether client code may access the symbol at all (visibility rules)."""
    if sym.kind in _TYPE_KINDS:
        info = table.lookup_type(sym.fqn)
        return info is not None and _type_exported(info, table)
    member = _find_member(sym, table)
    return member is not None and _member_exported(member, table)


def is_effectively_extensible(sym: Symbol, table: SymbolTable) -> bool:
    """Neither final nor sealed; classes additionally need an accessible
    (public or protected) constructor."""
    info = table.lookup_type(sym.fqn)
    if info is None:
        return False
    return is_effectively_extensible_info(info, table)


def _find_member(sym: Symbol, table: SymbolTable) -> Optional[MemberInfo]:
    if sym.declaring_type is None:
        return None
    for m in table.members_of(sym.declaring_type):
        if m.name != sym.fqn.split(".")[-1]:
            continue
        if m.kind is n.MemberKind.FIELD:
            if sym.kind is SymbolKind.FIELD:
                return m
        elif m.signature == sym.signature:
            return m
    return None


# ---------------------------------------------------------------------------
# Legal uses
# ---------------------------------------------------------------------------


def _has_public_constructor(info: TypeInfo) -> bool:
    return any(
        m.kind is n.MemberKind.CONSTRUCTOR and m.visibility() == "public"
        for m in info.members
    )


def legal_uses(sym: Symbol, table: SymbolTable) -> frozenset[UseKind]:
    """The set of legal client uses of an exported symbol."""
    uses: set[UseKind] = set()
    if sym.kind is SymbolKind.CLASS:
        info = table.lookup_type(sym.fqn)
        uses.add(UseKind.TYPE_REFERENCE)
        if info is not None:
            if "abstract" not in info.modifiers and _has_public_constructor(info):
                uses.add(UseKind.INSTANTIATION)
            if is_effectively_extensible_info(info, table):
                uses.add(UseKind.INHERITANCE)
    elif sym.kind is SymbolKind.INTERFACE:
        info = table.lookup_type(sym.fqn)
        uses.add(UseKind.TYPE_REFERENCE)
        if info is not None and is_effectively_extensible_info(info, table):
            uses.add(UseKind.IMPLEMENTATION)
            uses.add(UseKind.INTERFACE_EXTENSION)
    elif sym.kind is SymbolKind.CONSTRUCTOR:
        uses.add(UseKind.CONSTRUCTOR_INVOCATION)
    elif sym.kind is SymbolKind.METHOD:
        if "static" in sym.modifiers:
            uses.add(UseKind.STATIC_INVOCATION)
        else:
            uses.add(UseKind.METHOD_INVOCATION)
            if "final" not in sym.modifiers and sym.declaring_type is not None:
                declaring = table.lookup_type(sym.declaring_type)
                if declaring is not None and is_effectively_extensible_info(
                    declaring, table
                ):
                    uses.add(UseKind.OVERRIDING)
    elif sym.kind is SymbolKind.FIELD:
        uses.add(UseKind.FIELD_READ)
        if "final" not in sym.modifiers:
            uses.add(UseKind.FIELD_WRITE)
    return frozenset(uses)


# ---------------------------------------------------------------------------
# Model construction and serialization
# ---------------------------------------------------------------------------


def build_sum(
    library_units: list[n.SourceUnit], library_name: str = "library"
) -> UsageModel:
    """Build the usage model of a library: every exported symbol mapped to
    its legal uses."""
    table = build_symbol_table(library_units)
    return build_sum_from_table(table, library_name)


def build_sum_from_table(table: SymbolTable, library_name: str) -> UsageModel:
    entries: dict[Symbol, frozenset[UseKind]] = {}
    for info in table.own_types():
        tsym = _symbol_for_type(info, table)
        if tsym.exported:
            entries[tsym] = legal_uses(tsym, table)
        if not tsym.exported:
            continue
        for member in info.members:
            msym = _symbol_for_member(member, table)
            if msym.exported:
                entries[msym] = legal_uses(msym, table)
    ordered = dict(sorted(entries.items(), key=lambda kv: kv[0].sort_key()))
    return UsageModel(library_name, ordered, table)


def model_to_dict(model: UsageModel) -> dict:
    """Serializable form: the normative symbol list plus a resolution
    section (type hierarchy, member types) so client analysis can run from
    the serialized model alone."""
    symbols = [
        {
            "fqn": sym.fqn,
            "kind": sym.kind.value,
            "signature": sym.signature,
            "modifiers": sorted(sym.modifiers),
            "uses": sorted(u.value for u in uses),
        }
        for sym, uses in sorted(model.entries.items(), key=lambda kv: kv[0].sort_key())
    ]
    types = []
    members = []
    for info in sorted(model.table.own_types(), key=lambda t: t.fqn):
        types.append(
            {
                "fqn": info.fqn,
                "kind": info.kind.value,
                "modifiers": sorted(info.modifiers),
                "type_params": list(info.type_params),
                "supertypes": list(info.supertypes),
                "external": sorted(info.external_supertypes),
                "enclosing": info.enclosing,
            }
        )
        for m in sorted(info.members, key=lambda m: (m.name, m.signature or "")):
            members.append(
                {
                    "declaring": m.declaring,
                    "kind": m.kind.value,
                    "name": m.name,
                    "modifiers": sorted(m.modifiers),
                    "signature": m.signature,
                    "params": list(m.param_types),
                    "returns": m.return_type,
                    "field_type": m.field_type,
                    "synthesized": m.synthesized,
                }
            )
    return {
        "library": model.library_name,
        "symbols": symbols,
        "resolution": {"types": types, "members": members},
    }


def model_from_dict(data: dict) -> UsageModel:
    resolution = data.get("resolution")
    if resolution is None:
        raise ModelMismatch("model file lacks the resolution section")
    table = SymbolTable()
    members_by_type: dict[str, list[MemberInfo]] = {}
    for m in resolution["members"]:
        members_by_type.setdefault(m["declaring"], []).append(
            MemberInfo(
                declaring=m["declaring"],
                kind=n.MemberKind(m["kind"]),
                name=m["name"],
                modifiers=frozenset(m["modifiers"]),
                signature=m["signature"],
                param_types=tuple(m["params"]),
                return_type=m["returns"],
                field_type=m["field_type"],
                synthesized=m.get("synthesized", False),
            )
        )
    for t in resolution["types"]:
        table.types[t["fqn"]] = TypeInfo(
            fqn=t["fqn"],
            kind=n.TypeKind(t["kind"]),
            modifiers=frozenset(t["modifiers"]),
            type_params=tuple(t["type_params"]),
            supertypes=tuple(t["supertypes"]),
            external_supertypes=frozenset(t["external"]),
            members=tuple(members_by_type.get(t["fqn"], [])),
            enclosing=t.get("enclosing"),
        )
    entries: dict[Symbol, frozenset[UseKind]] = {}
    for s in data["symbols"]:
        kind = SymbolKind(s["kind"])
        declaring = None
        if kind not in _TYPE_KINDS:
            declaring = s["fqn"].rsplit(".", 1)[0]
        sym = Symbol(
            fqn=s["fqn"],
            kind=kind,
            signature=s["signature"],
            declaring_type=declaring,
            modifiers=frozenset(s["modifiers"]),
            exported=True,
        )
        entries[sym] = frozenset(UseKind(u) for u in s["uses"])
    return UsageModel(data["library"], entries, table)
