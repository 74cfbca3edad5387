"""
Structural Queries

Nesting depth, enclosing units and unit naming shared by the metric engines.
"""

from typing import Optional

from .nodes import LOOP_KINDS, UNIT_KINDS, NodeKind, SyntaxNode


def _adds_nesting(child: SyntaxNode, parent: SyntaxNode) -> bool:
    """Whether `parent` opens a nesting level for `child`"""
    kind = parent.kind
    if kind is NodeKind.IF:
        if child.role == "consequence":
            return True
        # else-if continues the chain's level; a plain else nests
        return child.role == "alternative" and child.kind is not NodeKind.IF
    if kind in LOOP_KINDS or kind is NodeKind.SWITCH:
        return child.role == "body"
    if kind is NodeKind.CATCH:
        return child.role == "body"
    if kind is NodeKind.TERNARY:
        return True
    if kind is NodeKind.LAMBDA:
        return child.role == "body"
    return False


def outermost_unit(node: SyntaxNode) -> Optional[SyntaxNode]:
    """Top-level method/constructor/initializer that contains `node` (or is it)"""
    unit = node if node.kind in UNIT_KINDS else None
    for ancestor in node.ancestors():
        if ancestor.kind in UNIT_KINDS:
            unit = ancestor
    return unit


def nesting_depth(node: SyntaxNode) -> int:
    """
    Count of enclosing nesting structures between `node` and its outermost unit

    Statements directly in a method body have depth 0. Methods of anonymous or
    local classes inside a unit sit one level deeper than their surroundings.
    """
    depth = 0
    child = node
    parent = node.parent
    while parent is not None:
        if child.kind in UNIT_KINDS:
            if parent.enclosing(*UNIT_KINDS) is None:
                break
            depth += 1
        elif _adds_nesting(child, parent):
            depth += 1
        child, parent = parent, parent.parent
    return depth


def declared_name(node: SyntaxNode) -> Optional[str]:
    name = node.child("name")
    return name.text if name is not None else None


def unit_name(unit: SyntaxNode) -> str:
    """Qualified display name such as `KickCommand.execute` or `Foo.<clinit>`"""
    owner = unit.enclosing(NodeKind.TYPE_DECLARATION)
    owner_name = declared_name(owner) if owner is not None else None
    if unit.kind is NodeKind.INITIALIZER:
        own = "<clinit>" if unit.grammar_type == "static_initializer" else "<init-block>"
    elif unit.kind is NodeKind.FIELD_DECLARATION:
        declarator = unit.child("declarator")
        own = declared_name(declarator) if declarator is not None else "<field>"
    else:
        own = declared_name(unit) or "<anonymous>"
    return f"{owner_name}.{own}" if owner_name else own


def is_static_final(declaration: SyntaxNode) -> bool:
    """Field declared `static final`, or any interface constant"""
    if declaration.grammar_type == "constant_declaration":
        return True
    for child in declaration.children:
        if child.kind is NodeKind.MODIFIERS and child.text:
            words = child.text.split()
            return "static" in words and "final" in words
    return False
