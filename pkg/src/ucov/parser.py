"""Recursive-descent parser for J-lite source files.

The grammar covers package/import declarations, class and interface
declarations (with generics, nesting, extends/implements/permits), fields,
methods, constructors, a small statement language, and an expression
language including lambdas, anonymous class bodies, and casts.

Ambiguous constructs (cast vs. parenthesized expression, local declaration
vs. expression statement, lambda vs. parenthesized expression) are handled
by bounded backtracking over the token stream.
"""

from __future__ import annotations

from typing import Optional

from . import nodes as n
from .errors import ParseError
from .lexer import Token, tokenize

MODIFIER_KEYWORDS = frozenset(
    {"public", "protected", "private", "abstract", "final", "sealed", "static", "default"}
)

_EXPR_START = frozenset(
    {"IDENT", "INT", "STRING", "CHAR", "true", "false", "null", "this", "new", "(", "!", "~"}
)


class _Parser:
    def __init__(self, tokens: list[Token], path: str):
        self.tokens = tokens
        self.pos = 0
        self.path = path

    # -- token helpers ----------------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        idx = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[idx]

    def at(self, ttype: str) -> bool:
        return self.peek().type == ttype

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.type != "EOF":
            self.pos += 1
        return tok

    def accept(self, ttype: str) -> Optional[Token]:
        if self.at(ttype):
            return self.advance()
        return None

    def expect(self, ttype: str) -> Token:
        if self.at(ttype):
            return self.advance()
        tok = self.peek()
        raise self.error(f"expected {ttype!r}, found {tok.value!r}", tok)

    def error(self, msg: str, tok: Optional[Token] = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, self.path, tok.line, tok.column)

    def loc(self, tok: Token) -> n.Location:
        return n.Location(self.path, tok.line, tok.column)

    # -- unit -------------------------------------------------------------

    def parse_unit(self) -> n.SourceUnit:
        package_name = ""
        if self.accept("package"):
            package_name = self.parse_qname()
            self.expect(";")
        imports = []
        while self.at("import"):
            tok = self.advance()
            parts = [self.expect("IDENT").value]
            on_demand = False
            while self.accept("."):
                if self.accept("*"):
                    on_demand = True
                    break
                parts.append(self.expect("IDENT").value)
            self.expect(";")
            imports.append(n.ImportDecl(".".join(parts), on_demand, self.loc(tok)))
        types = []
        while not self.at("EOF"):
            types.append(self.parse_type_decl())
        return n.SourceUnit(self.path, package_name, imports, types)

    def parse_qname(self) -> str:
        parts = [self.expect("IDENT").value]
        while self.at(".") and self.peek(1).type == "IDENT":
            self.advance()
            parts.append(self.advance().value)
        return ".".join(parts)

    # -- declarations -----------------------------------------------------

    def parse_modifiers(self) -> set[str]:
        mods: set[str] = set()
        while True:
            tok = self.peek()
            if tok.type in MODIFIER_KEYWORDS:
                self.advance()
                mods.add(tok.type)
            elif tok.type == "@":
                # Marker annotations (e.g. @Override) are lexed and discarded.
                self.advance()
                self.expect("IDENT")
            else:
                return mods

    def parse_type_decl(self, mods: Optional[set[str]] = None) -> n.TypeDecl:
        if mods is None:
            mods = self.parse_modifiers()
        if self.at("class"):
            kind = n.TypeKind.CLASS
            self.advance()
        elif self.at("interface"):
            kind = n.TypeKind.INTERFACE
            self.advance()
        else:
            raise self.error("expected 'class' or 'interface'")
        name_tok = self.expect("IDENT")
        type_params: list[str] = []
        if self.accept("<"):
            type_params.append(self.expect("IDENT").value)
            while self.accept(","):
                type_params.append(self.expect("IDENT").value)
            self.expect(">")
        extends_refs = self.parse_ref_list("extends")
        implements_refs = self.parse_ref_list("implements")
        permits_refs = self.parse_ref_list("permits")
        self.expect("{")
        members: list[n.MemberDecl] = []
        nested: list[n.TypeDecl] = []
        while not self.at("}"):
            member_mods = self.parse_modifiers()
            if self.at("class") or self.at("interface"):
                nested.append(self.parse_type_decl(member_mods))
            else:
                members.append(self.parse_member(member_mods, name_tok.value))
        self.expect("}")
        return n.TypeDecl(
            kind=kind,
            simple_name=name_tok.value,
            modifiers=mods,
            type_params=type_params,
            extends_refs=extends_refs,
            implements_refs=implements_refs,
            permits_refs=permits_refs,
            members=members,
            nested=nested,
            location=self.loc(name_tok),
        )

    def parse_ref_list(self, keyword: str) -> list[n.TypeRef]:
        refs: list[n.TypeRef] = []
        if self.accept(keyword):
            refs.append(self.parse_type_ref())
            while self.accept(","):
                refs.append(self.parse_type_ref())
        return refs

    def parse_member(self, mods: set[str], enclosing_name: str) -> n.MemberDecl:
        # Constructor: the enclosing type's simple name immediately followed by '('.
        if (
            self.at("IDENT")
            and self.peek().value == enclosing_name
            and self.peek(1).type == "("
        ):
            name_tok = self.advance()
            params = self.parse_params()
            throws = self.parse_ref_list("throws")
            body = self.parse_block()
            return n.MemberDecl(
                kind=n.MemberKind.CONSTRUCTOR,
                name=name_tok.value,
                modifiers=mods,
                location=self.loc(name_tok),
                params=params,
                throws_refs=throws,
                body=body,
            )
        is_void = bool(self.accept("void"))
        return_type = None if is_void else self.parse_type_ref()
        name_tok = self.expect("IDENT")
        if self.at("("):
            params = self.parse_params()
            throws = self.parse_ref_list("throws")
            body = None
            if not self.accept(";"):
                body = self.parse_block()
            return n.MemberDecl(
                kind=n.MemberKind.METHOD,
                name=name_tok.value,
                modifiers=mods,
                location=self.loc(name_tok),
                return_type=return_type,
                is_void=is_void,
                params=params,
                throws_refs=throws,
                body=body,
            )
        if is_void:
            raise self.error("field cannot have type void", name_tok)
        init = None
        if self.accept("="):
            init = self.parse_expr()
        self.expect(";")
        return n.MemberDecl(
            kind=n.MemberKind.FIELD,
            name=name_tok.value,
            modifiers=mods,
            location=self.loc(name_tok),
            field_type=return_type,
            field_init=init,
        )

    def parse_params(self) -> list[n.Param]:
        self.expect("(")
        params: list[n.Param] = []
        if not self.at(")"):
            params.append(self.parse_param())
            while self.accept(","):
                params.append(self.parse_param())
        self.expect(")")
        return params

    def parse_param(self) -> n.Param:
        type_ref = self.parse_type_ref()
        name = self.expect("IDENT").value
        return n.Param(name, type_ref)

    def parse_type_ref(self) -> n.TypeRef:
        head = self.peek()
        if head.type != "IDENT":
            raise self.error("expected type name")
        name = self.parse_qname()
        type_args: list[n.TypeRef] = []
        if self.at("<"):
            save = self.pos
            self.advance()
            try:
                if not self.at(">"):  # <> diamond
                    type_args.append(self.parse_type_ref())
                    while self.accept(","):
                        type_args.append(self.parse_type_ref())
                self.expect(">")
            except ParseError:
                self.pos = save
                type_args = []
        dims = 0
        while self.at("[") and self.peek(1).type == "]":
            self.advance()
            self.advance()
            dims += 1
        return n.TypeRef(name, type_args, dims, self.loc(head))

    # -- statements ---------------------------------------------------------

    def parse_block(self) -> n.Block:
        self.expect("{")
        stmts: list[n.Stmt] = []
        while not self.at("}"):
            stmts.append(self.parse_stmt())
        self.expect("}")
        return n.Block(stmts)

    def parse_stmt(self) -> n.Stmt:
        t = self.peek().type
        if t == "{":
            return self.parse_block()
        if t == "if":
            self.advance()
            self.expect("(")
            cond = self.parse_expr()
            self.expect(")")
            then = self.parse_stmt()
            orelse = self.parse_stmt() if self.accept("else") else None
            return n.If(cond, then, orelse)
        if t == "while":
            self.advance()
            self.expect("(")
            cond = self.parse_expr()
            self.expect(")")
            return n.While(cond, self.parse_stmt())
        if t == "for":
            self.advance()
            self.expect("(")
            init = None
            if not self.at(";"):
                init = self.parse_local_or_expr_stmt()
            else:
                self.advance()
            cond = None
            if not self.at(";"):
                cond = self.parse_expr()
            self.expect(";")
            update = None
            if not self.at(")"):
                update = self.parse_expr()
            self.expect(")")
            return n.For(init, cond, update, self.parse_stmt())
        if t == "return":
            self.advance()
            expr = None
            if not self.at(";"):
                expr = self.parse_expr()
            self.expect(";")
            return n.Return(expr)
        if t == "throw":
            self.advance()
            expr = self.parse_expr()
            self.expect(";")
            return n.Throw(expr)
        if t == "try":
            self.advance()
            body = self.parse_block()
            catches: list[n.Catch] = []
            while self.at("catch"):
                self.advance()
                self.expect("(")
                ctype = self.parse_type_ref()
                cname = self.expect("IDENT").value
                self.expect(")")
                catches.append(n.Catch(ctype, cname, self.parse_block()))
            finally_block = None
            if self.accept("finally"):
                finally_block = self.parse_block()
            if not catches and finally_block is None:
                raise self.error("try requires catch or finally")
            return n.Try(body, catches, finally_block)
        return self.parse_local_or_expr_stmt()

    def parse_local_or_expr_stmt(self) -> n.Stmt:
        save = self.pos
        if self.at("IDENT"):
            try:
                type_ref = self.parse_type_ref()
                name_tok = self.expect("IDENT")
                init = None
                if self.accept("="):
                    init = self.parse_expr()
                self.expect(";")
                return n.LocalDecl(type_ref, name_tok.value, init, type_ref.location)
            except ParseError:
                self.pos = save
        expr = self.parse_expr()
        self.expect(";")
        return n.ExprStmt(expr)

    # -- expressions ----------------------------------------------------------

    _BINARY_LEVELS = [
        ("||",),
        ("&&",),
        ("|",),
        ("^",),
        ("&",),
        ("==", "!="),
        ("<", ">", "<=", ">="),
        ("+", "-"),
        ("*", "/", "%"),
    ]

    def parse_expr(self) -> n.Expr:
        return self.parse_assignment()

    def parse_assignment(self) -> n.Expr:
        left = self.parse_binary(0)
        if self.at("="):
            tok = self.advance()
            right = self.parse_assignment()
            return n.Assign(left, right, self.loc(tok))
        return left

    def parse_binary(self, level: int) -> n.Expr:
        if level >= len(self._BINARY_LEVELS):
            return self.parse_unary()
        ops = self._BINARY_LEVELS[level]
        left = self.parse_binary(level + 1)
        while self.peek().type in ops:
            tok = self.advance()
            right = self.parse_binary(level + 1)
            left = n.Binary(tok.type, left, right, self.loc(tok))
        return left

    def parse_unary(self) -> n.Expr:
        t = self.peek().type
        if t in ("!", "~", "-", "+", "++", "--"):
            tok = self.advance()
            return n.Unary(tok.type, self.parse_unary(), self.loc(tok))
        return self.parse_postfix()

    def parse_postfix(self) -> n.Expr:
        expr = self.parse_primary()
        while True:
            if self.at(".") and self.peek(1).type == "IDENT":
                self.advance()
                name_tok = self.advance()
                if self.at("("):
                    args = self.parse_args()
                    expr = n.MethodCall(expr, name_tok.value, args, self.loc(name_tok))
                else:
                    expr = n.FieldAccess(expr, name_tok.value, self.loc(name_tok))
            elif self.at("++") or self.at("--"):
                tok = self.advance()
                expr = n.Unary("post" + tok.type, expr, self.loc(tok))
            else:
                return expr

    def parse_args(self) -> list[n.Expr]:
        self.expect("(")
        args: list[n.Expr] = []
        if not self.at(")"):
            args.append(self.parse_expr())
            while self.accept(","):
                args.append(self.parse_expr())
        self.expect(")")
        return args

    def parse_primary(self) -> n.Expr:
        tok = self.peek()
        if tok.type == "INT":
            self.advance()
            return n.Literal(tok.value, "int", self.loc(tok))
        if tok.type == "STRING":
            self.advance()
            return n.Literal(tok.value, "string", self.loc(tok))
        if tok.type == "CHAR":
            self.advance()
            return n.Literal(tok.value, "char", self.loc(tok))
        if tok.type in ("true", "false"):
            self.advance()
            return n.Literal(tok.value, "boolean", self.loc(tok))
        if tok.type == "null":
            self.advance()
            return n.Literal(None, "null", self.loc(tok))
        if tok.type == "this":
            self.advance()
            return n.This(self.loc(tok))
        if tok.type == "new":
            return self.parse_new()
        if tok.type == "(":
            lam = self.try_parse_lambda()
            if lam is not None:
                return lam
            cast = self.try_parse_cast()
            if cast is not None:
                return cast
            self.advance()
            expr = self.parse_expr()
            self.expect(")")
            return expr
        if tok.type == "IDENT":
            self.advance()
            name = n.Name(tok.value, self.loc(tok))
            if self.at("("):
                args = self.parse_args()
                return n.MethodCall(None, tok.value, args, self.loc(tok))
            return name
        raise self.error(f"unexpected token {tok.value!r} in expression", tok)

    def parse_new(self) -> n.Expr:
        self.expect("new")
        type_ref = self.parse_type_ref()
        args = self.parse_args()
        anon_body: Optional[list[n.MemberDecl]] = None
        if self.at("{"):
            self.advance()
            anon_body = []
            while not self.at("}"):
                mods = self.parse_modifiers()
                anon_body.append(self.parse_member(mods, type_ref.name.split(".")[-1]))
            self.expect("}")
        assert type_ref.location is not None
        return n.New(type_ref, args, anon_body, type_ref.location)

    def _scan_matching_paren(self) -> int:
        """Index of the token after the ')' matching the '(' at self.pos, or -1."""
        depth = 0
        i = self.pos
        while i < len(self.tokens):
            t = self.tokens[i].type
            if t == "(":
                depth += 1
            elif t == ")":
                depth -= 1
                if depth == 0:
                    return i + 1
            elif t in ("EOF", "{", "}", ";"):
                return -1
            i += 1
        return -1

    def try_parse_lambda(self) -> Optional[n.Expr]:
        after = self._scan_matching_paren()
        if after < 0 or self.tokens[after].type != "->":
            return None
        head = self.advance()  # '('
        params: list[n.Param] = []
        if not self.at(")"):
            params.append(self.parse_lambda_param())
            while self.accept(","):
                params.append(self.parse_lambda_param())
        self.expect(")")
        self.expect("->")
        body: object
        if self.at("{"):
            body = self.parse_block()
        else:
            body = self.parse_expr()
        return n.Lambda(params, body, self.loc(head))

    def parse_lambda_param(self) -> n.Param:
        # Typed form: `Type name`; untyped form: bare identifier.
        if self.at("IDENT") and self.peek(1).type in (",", ")"):
            tok = self.advance()
            return n.Param(tok.value, n.TypeRef("", location=self.loc(tok)))
        return self.parse_param()

    def try_parse_cast(self) -> Optional[n.Expr]:
        save = self.pos
        head = self.advance()  # '('
        try:
            type_ref = self.parse_type_ref()
            self.expect(")")
        except ParseError:
            self.pos = save
            return None
        if self.peek().type not in _EXPR_START:
            self.pos = save
            return None
        operand = self.parse_unary()
        return n.Cast(type_ref, operand, self.loc(head))


def parse_unit(text: str, path: str) -> n.SourceUnit:
    """Parse a single J-lite source file into a SourceUnit.

    Raises ParseError (carrying file/line/column) on any input outside the
    grammar.
    """
    parser = _Parser(tokenize(text, path), path)
    return parser.parse_unit()
