"""Tolerant Java lexing and brace-balanced method extraction.

This is not a Java parser. A lexer that understands strings, char literals,
comments, text blocks and annotations feeds a context-stack scanner that
tracks what every `{` opens: a named type body, an anonymous/enum-constant
body, a method body, or a plain block. Methods and constructors declared in
*named* class-like bodies (at any nesting depth) are extracted with exact
line spans; bodies of anonymous and local classes stay inside their enclosing
method's text. Corrupt files (unbalanced braces) are rejected wholesale.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field

from .errors import NotUtf8, UnbalancedBraces

__all__ = ["RawMethod", "lex", "scan_methods"]

# keywords that may not serve as a method/constructor name
_NON_NAME_KEYWORDS = {
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
    "class", "const", "continue", "default", "do", "double", "else", "enum",
    "extends", "final", "finally", "float", "for", "goto", "if", "implements",
    "import", "instanceof", "int", "interface", "long", "native", "new",
    "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "try", "void", "volatile", "while",
}

_TYPE_KEYWORDS = {"class", "interface", "enum"}

# multi-character operators that contain '=' lex as one token so that the
# member scanner's field-initializer check only fires on plain assignment
_EQ_OPS = (
    ">>>=", "<<=", ">>=", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=",
    "%=", "&=", "|=", "^=",
)

_WORD_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$")


@dataclass(frozen=True)
class Tok:
    kind: str  # word | num | str | char | punct
    text: str
    offset: int
    line: int


@dataclass(frozen=True)
class Comment:
    text: str
    start: int
    end: int  # offset one past the comment
    start_line: int
    end_line: int
    block: bool


@dataclass
class LexResult:
    tokens: list = field(default_factory=list)
    comments: list = field(default_factory=list)
    error_lines: list = field(default_factory=list)


def lex(source: str) -> LexResult:
    """Tokenize tolerantly; malformed literals are recovered, not fatal.

    Unterminated strings and char literals resync at end of line (recorded in
    error_lines); unterminated block comments swallow the rest of the file.
    """
    res = LexResult()
    tokens = res.tokens
    n = len(source)
    i = 0
    line = 1
    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch in " \t\r\f\x0b":
            i += 1
            continue
        if ch == "/" and i + 1 < n:
            nxt = source[i + 1]
            if nxt == "/":
                j = source.find("\n", i)
                if j == -1:
                    j = n
                res.comments.append(Comment(source[i:j], i, j, line, line, block=False))
                i = j
                continue
            if nxt == "*":
                j = source.find("*/", i + 2)
                start_line = line
                if j == -1:
                    res.error_lines.append(line)
                    line += source.count("\n", i)
                    res.comments.append(Comment(source[i:], i, n, start_line, line, block=True))
                    i = n
                    continue
                line += source.count("\n", i, j + 2)
                res.comments.append(Comment(source[i : j + 2], i, j + 2, start_line, line, block=True))
                i = j + 2
                continue
        if ch == '"':
            if source.startswith('"""', i):
                j = i + 3
                while j < n and not source.startswith('"""', j):
                    if source[j] == "\\":
                        j += 1
                    j += 1
                start = i
                if j >= n:
                    res.error_lines.append(line)
                    j = n
                else:
                    j += 3
                tokens.append(Tok("str", source[start:j], start, line))
                line += source.count("\n", start, j)
                i = j
                continue
            j = i + 1
            closed = False
            while j < n:
                c = source[j]
                if c == "\\" and j + 1 < n:
                    j += 2
                    continue
                if c == '"':
                    closed = True
                    j += 1
                    break
                if c == "\n":
                    break
                j += 1
            if not closed:
                res.error_lines.append(line)
            tokens.append(Tok("str", source[i:j], i, line))
            i = j
            continue
        if ch == "'":
            j = i + 1
            closed = False
            while j < n:
                c = source[j]
                if c == "\\" and j + 1 < n:
                    j += 2
                    continue
                if c == "'":
                    closed = True
                    j += 1
                    break
                if c == "\n":
                    break
                j += 1
            if not closed:
                res.error_lines.append(line)
            tokens.append(Tok("char", source[i:j], i, line))
            i = j
            continue
        if ch in _WORD_START or ch.isalpha():
            j = i + 1
            while j < n and (source[j].isalnum() or source[j] in "_$"):
                j += 1
            tokens.append(Tok("word", source[i:j], i, line))
            i = j
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and (source[j].isalnum() or source[j] in "._"):
                j += 1
            tokens.append(Tok("num", source[i:j], i, line))
            i = j
            continue
        matched = False
        for op in _EQ_OPS:
            if source.startswith(op, i):
                tokens.append(Tok("punct", op, i, line))
                i += len(op)
                matched = True
                break
        if matched:
            continue
        tokens.append(Tok("punct", ch, i, line))
        i += 1
    return res


@dataclass(frozen=True)
class RawMethod:
    """One extracted method/constructor before documents are minted."""

    text: str
    signature_text: str
    doc_comment: str | None
    start_line: int
    end_line: int
    body_start: int  # offset of the opening brace in the source
    body_end: int  # offset of the closing brace in the source
    parse_error: bool


# scanner context kinds
_ROOT = "root"
_TYPE = "type"  # named class/interface/enum body: members are scanned
_BODY = "body"  # method body, initializer, anonymous body, any plain block


@dataclass
class _Ctx:
    kind: str
    extract: bool = False
    is_enum: bool = False
    in_constants: bool = False
    buf: list = field(default_factory=list)
    paren_depth: int = 0
    boundary: int = 0  # offset after the last member boundary
    pending: dict | None = None  # method info carried by a body context
    # True when closing this context completes a member of the parent; False
    # for expression braces (annotation arrays, enum-constant arguments)
    # whose member header continues after the closing brace.
    member_body: bool = True


def _has_type_keyword(buf: list) -> bool:
    depth = 0
    for idx, tok in enumerate(buf):
        t = tok.text
        if t == "(":
            depth += 1
        elif t == ")":
            depth -= 1
        elif depth == 0 and tok.kind == "word":
            if t in _TYPE_KEYWORDS and (idx == 0 or buf[idx - 1].text != "."):
                return True
            # contextual keyword: `record Name(...)` declares a record type
            if (
                t == "record"
                and idx + 1 < len(buf)
                and buf[idx + 1].kind == "word"
                and (idx == 0 or buf[idx - 1].text != ".")
            ):
                return True
    return False


def _has_assignment(buf: list) -> bool:
    depth = 0
    for tok in buf:
        t = tok.text
        if t == "(":
            depth += 1
        elif t == ")":
            depth -= 1
        elif t == "=" and depth == 0:
            return True
    return False


def _is_method_header(buf: list) -> bool:
    """Does the member buffer end in `name(params) [trailing []] [throws ...]`?"""
    if not buf:
        return False
    j = len(buf) - 1
    # archaic postfix array dims on the return type: `int f()[] {`
    while j >= 1 and buf[j].text == "]" and buf[j - 1].text == "[":
        j -= 2
    if j < 0:
        return False
    if buf[j].text != ")":
        # allow a trailing throws clause: `) throws A.B, C {`
        k = j
        while k >= 0 and (buf[k].kind == "word" or buf[k].text in (".", ",")):
            k -= 1
        if k < 0 or buf[k].text != ")" or k + 1 > j or buf[k + 1].text != "throws":
            return False
        j = k
    # find the '(' matching buf[j]
    depth = 0
    i = j
    while i >= 0:
        t = buf[i].text
        if t == ")":
            depth += 1
        elif t == "(":
            depth -= 1
            if depth == 0:
                break
        i -= 1
    if i <= 0:
        return False
    name = buf[i - 1]
    if name.kind != "word" or name.text in _NON_NAME_KEYWORDS:
        return False
    return True


def scan_methods(source) -> list:
    """Extract every method/constructor at named-type member depth.

    Accepts str or UTF-8 bytes. Raises UnbalancedBraces when brace nesting
    never closes (the caller discards the whole file), NotUtf8 on undecodable
    bytes. Returns RawMethod records in source order.
    """
    if isinstance(source, (bytes, bytearray)):
        try:
            source = bytes(source).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise NotUtf8(f"input is not UTF-8: {exc}") from exc
    lexed = lex(source)
    methods: list[RawMethod] = []
    stack = [_Ctx(kind=_ROOT, extract=True)]
    comment_starts = [c.start for c in lexed.comments]

    def finalize(pending: dict, close_tok: Tok) -> None:
        start_off = pending["start"]
        start_line = pending["start_line"]
        end_off = close_tok.offset
        end_line = close_tok.line
        text = source[start_off : end_off + 1]
        sig = source[start_off : pending["brace"]].rstrip()
        doc = _doc_comment_for(
            lexed.comments, comment_starts, pending["boundary"], start_off, start_line
        )
        has_error = any(start_line <= ln <= end_line for ln in lexed.error_lines)
        methods.append(
            RawMethod(
                text=text,
                signature_text=sig,
                doc_comment=doc,
                start_line=start_line,
                end_line=end_line,
                body_start=pending["brace"],
                body_end=end_off,
                parse_error=has_error,
            )
        )

    for tok in lexed.tokens:
        top = stack[-1]
        t = tok.text
        if top.kind in (_ROOT, _TYPE):
            if t == "{" and top.paren_depth == 0:
                buf = top.buf
                if top.is_enum and top.in_constants:
                    stack.append(_Ctx(kind=_BODY))  # enum constant body
                elif _has_type_keyword(buf):
                    is_enum = any(tk.kind == "word" and tk.text == "enum" for tk in buf)
                    stack.append(
                        _Ctx(
                            kind=_TYPE,
                            extract=top.extract,
                            is_enum=is_enum,
                            in_constants=is_enum,
                            boundary=tok.offset + 1,
                        )
                    )
                elif (
                    top.kind == _TYPE
                    and top.extract
                    and not _has_assignment(buf)
                    and _is_method_header(buf)
                ):
                    stack.append(
                        _Ctx(
                            kind=_BODY,
                            pending={
                                "start": buf[0].offset,
                                "start_line": buf[0].line,
                                "brace": tok.offset,
                                "boundary": top.boundary,
                            },
                        )
                    )
                else:
                    # initializer block, array/annotation default, static {}
                    stack.append(_Ctx(kind=_BODY))
                top.buf = []
            elif t == "{":
                # expression brace inside a member header (annotation array
                # value, enum-constant argument); member scan resumes on pop
                stack.append(_Ctx(kind=_BODY, member_body=False))
            elif t == "}":
                if len(stack) == 1:
                    raise UnbalancedBraces("closing brace at top level")
                stack.pop()
                parent = stack[-1]
                parent.buf = []
                parent.boundary = tok.offset + 1
            elif t == ";" and top.paren_depth == 0:
                top.buf = []
                top.boundary = tok.offset + 1
                if top.in_constants:
                    top.in_constants = False
            elif t == "," and top.paren_depth == 0 and top.in_constants:
                top.buf = []
                top.boundary = tok.offset + 1
            else:
                if t == "(":
                    top.paren_depth += 1
                elif t == ")":
                    top.paren_depth = max(0, top.paren_depth - 1)
                top.buf.append(tok)
        else:  # _BODY: pure brace tracking
            if t == "{":
                stack.append(_Ctx(kind=_BODY))
            elif t == "}":
                closed = stack.pop()
                if closed.pending is not None:
                    finalize(closed.pending, tok)
                parent = stack[-1]
                if parent.kind in (_ROOT, _TYPE) and closed.member_body:
                    parent.buf = []
                    parent.boundary = tok.offset + 1

    if len(stack) != 1:
        raise UnbalancedBraces(f"{len(stack) - 1} unclosed brace context(s) at end of file")
    return methods


def _doc_comment_for(
    comments: list, starts: list, boundary: int, start: int, start_line: int
) -> str | None:
    """Last block comment between the previous member and this one, if /**."""
    idx = bisect_left(starts, start) - 1
    if idx < 0:
        return None
    c = comments[idx]
    if (
        c.block
        and c.text.startswith("/**")
        and c.start >= boundary
        and c.end <= start
        and c.end_line < start_line
    ):
        return c.text
    return None
