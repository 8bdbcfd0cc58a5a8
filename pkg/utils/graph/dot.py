from utils.graph.graph import Graph


def to_dot(g: Graph, name: str = "G") -> str:
    """
    Exporta el grafo en formato DOT (solo salida, nunca se vuelve a leer)

    Args:
        g (Graph): Grafo
        name (str): Nombre del grafo en el documento DOT

    Returns:
        str: Documento DOT
    """
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
