"""
Codificación graph6 (formato estándar de nauty)

Encabezado de tamaño: un byte n+63 si n <= 62, '~' y tres bytes si n <= 258047,
'~~' y seis bytes en otro caso. Luego la cadena de bits del triángulo superior
por columnas (x(0,1), x(0,2), x(1,2), x(0,3), ...) en grupos de 6 bits + 63.
"""

from typing import List, Tuple

from utils.errors import Graph6ParseError, ParameterError
from utils.graph.graph import Graph

HEADER = ">>graph6<<"
_MIN_BYTE, _MAX_BYTE = 63, 126


def _encode_size(n: int) -> str:
    if n < 0:
        raise ParameterError("n debe ser >= 0")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))
    raise ParameterError(f"n={n} excede el máximo de graph6")


def _decode_size(data: bytes) -> Tuple[int, int]:
    """Devuelve (n, bytes consumidos)"""
    if not data:
        raise Graph6ParseError("Cadena graph6 vacía", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6ParseError("Encabezado de tamaño truncado", len(data))
    n = 0
    for byte in data[start:start + width]:
        n = (n << 6) | (byte - 63)
    return n, start + width


def from_graph6(text: str) -> Graph:
    """
    Decodifica una cadena graph6

    Args:
        text (str): Cadena ASCII, con encabezado '>>graph6<<' opcional y salto de línea final opcional

    Returns:
        Graph: El grafo codificado

    Raises:
        Graph6ParseError: Longitud incorrecta, bytes fuera de rango o basura al final
    """
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if text.endswith("\n"):
        text = text[:-1]
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as e:
        raise Graph6ParseError("Carácter no ASCII", e.start)

    for offset, byte in enumerate(data):
        if not _MIN_BYTE <= byte <= _MAX_BYTE:
            raise Graph6ParseError(f"Byte fuera de rango: {byte}", offset)

    n, pos = _decode_size(data)
    total_bits = n * (n - 1) // 2
    expected = (total_bits + 5) // 6
    available = len(data) - pos
    if available < expected:
        raise Graph6ParseError(f"Se esperaban {expected} bytes de datos y hay {available}", len(data))
    if available > expected:
        raise Graph6ParseError("Basura al final de la cadena", pos + expected)

    adj = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + bit // 6] - 63
            if byte >> (5 - bit % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    if total_bits % 6:
        padding = (data[-1] - 63) & ((1 << (6 - total_bits % 6)) - 1)
        if padding:
            raise Graph6ParseError("Bits de relleno distintos de cero", len(data) - 1)
    return Graph._trusted(n, adj)


def to_graph6(g: Graph) -> str:
    """
    Codifica un grafo en graph6 (sin encabezado ni salto de línea)

    Args:
        g (Graph): Grafo a codificar

    Returns:
        str: Cadena graph6
    """
    out = [_encode_size(g.n)]
    group = filled = 0
    for j in range(1, g.n):
        column = g.adj[j]
        for i in range(j):
            group = (group << 1) | (column >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def parse_graph6_lines(text: str) -> List[Graph]:
    """
    Lee un grafo por línea, ignorando líneas vacías

    Args:
        text (str): Contenido con una cadena graph6 por línea

    Returns:
        list: Grafos leídos en orden
    """
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            graphs.append(from_graph6(line))
    return graphs
