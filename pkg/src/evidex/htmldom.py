"""Minimal DOM on top of html.parser, enough for article extraction.

No external HTML library is available in this environment, so we keep a
small lenient tree builder: mismatched end tags are tolerated, void
elements never take children, and character references are decoded by the
stdlib parser.
"""

from __future__ import annotations

from html.parser import HTMLParser

VOID_ELEMENTS = frozenset({
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr",
})

# Tags whose content is never article text.
NON_CONTENT_TAGS = frozenset({
    "script", "style", "noscript", "template", "svg", "iframe",
    "form", "button", "select", "option", "head", "canvas",
})

BLOCK_TAGS = frozenset({
    "p", "div", "section", "article", "main", "aside", "header", "footer",
    "nav", "ul", "ol", "li", "table", "tr", "td", "th", "blockquote",
    "pre", "h1", "h2", "h3", "h4", "h5", "h6", "figure", "figcaption",
    "dl", "dt", "dd", "hr", "address",
})

# Implicitly closed by an opening tag of the same kind.
_SELF_NESTING = frozenset({"p", "li", "dt", "dd", "option", "tr", "td", "th"})


class Node:
    __slots__ = ("tag", "attrs", "children", "parent")

    def __init__(self, tag: str, attrs: dict[str, str] | None = None,
                 parent: "Node | None" = None):
        self.tag = tag
        self.attrs = attrs or {}
        self.children: list[Node | str] = []
        self.parent = parent

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<Node {self.tag} children={len(self.children)}>"

    def attr(self, name: str, default: str = "") -> str:
        return self.attrs.get(name, default)

    def iter_nodes(self):
        """Depth-first iteration over element nodes, self included."""
        stack: list[Node] = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(c for c in reversed(node.children) if isinstance(c, Node))

    def find_all(self, *tags: str) -> list["Node"]:
        wanted = set(tags)
        return [n for n in self.iter_nodes() if n.tag in wanted]

    def find_first(self, *tags: str) -> "Node | None":
        wanted = set(tags)
        for node in self.iter_nodes():
            if node.tag in wanted:
                return node
        return None

    def text(self, br_as_newline: bool = True) -> str:
        """Concatenated text of all descendants, block tags adding newlines."""
        parts: list[str] = []
        self._collect_text(parts, br_as_newline)
        return "".join(parts)

    def _collect_text(self, parts: list[str], br_as_newline: bool) -> None:
        for child in self.children:
            if isinstance(child, str):
                parts.append(child)
            elif child.tag == "br":
                parts.append("\n" if br_as_newline else " ")
            elif child.tag in NON_CONTENT_TAGS:
                continue
            else:
                block = child.tag in BLOCK_TAGS
                if block:
                    parts.append("\n")
                child._collect_text(parts, br_as_newline)
                if block:
                    parts.append("\n")

    def ancestors(self):
        node = self.parent
        while node is not None:
            yield node
            node = node.parent


class _TreeBuilder(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.root = Node("document")
        self.stack = [self.root]

    def handle_starttag(self, tag, attrs):
        tag = tag.lower()
        if tag in _SELF_NESTING and self.stack[-1].tag == tag:
            self.stack.pop()
        node = Node(tag, {k.lower(): (v or "") for k, v in attrs}, self.stack[-1])
        self.stack[-1].children.append(node)
        if tag not in VOID_ELEMENTS:
            self.stack.append(node)

    def handle_startendtag(self, tag, attrs):
        tag = tag.lower()
        node = Node(tag, {k.lower(): (v or "") for k, v in attrs}, self.stack[-1])
        self.stack[-1].children.append(node)

    def handle_endtag(self, tag):
        tag = tag.lower()
        for i in range(len(self.stack) - 1, 0, -1):
            if self.stack[i].tag == tag:
                del self.stack[i:]
                return
        # stray end tag: ignore

    def handle_data(self, data):
        if data:
            self.stack[-1].children.append(data)


def parse_html(html: str) -> Node:
    builder = _TreeBuilder()
    builder.feed(html)
    builder.close()
    return builder.root
