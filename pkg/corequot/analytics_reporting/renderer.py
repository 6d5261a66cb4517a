from corequot.partition_core.partition import hook_matrix

EMPTY_DIAGRAM = "(empty)"


def render(lam, hooks=False):
    """
    Draws the Young diagram of λ as text, rows left-justified.

    Args:
        lam (Partition): The partition to draw.
        hooks (bool, optional): Print each box's hook length instead of '*'.
                                Lengths are right-aligned to the widest one
                                and separated by single spaces.

    Returns:
        str: The diagram, one line per row and no trailing newline.
    """
    if not lam:
        return EMPTY_DIAGRAM
    if not hooks:
        return "\n".join("*" * part for part in lam.parts)
    matrix = hook_matrix(lam)
    width = max(len(str(h)) for row in matrix for h in row)
    return "\n".join(" ".join(str(h).rjust(width) for h in row) for row in matrix)
