# Este proceso evalúa de forma exacta la tabla de cotas de f_k(n)

from utils.extremal import VALIDITY, bound_table, bound_table_frame
from utils.logger import logger
from utils.reports import emit_table


def main(args):
    """
    Proceso bounds

    Args:
        args: Argumentos (k, n, format)

    Returns:
        dict: Tabla JSON, metadata del archivo XLSX, o None si se emitió CSV
    """
    rows = bound_table(args.k, args.n)
    logger.info(f"Tabla de cotas para k={args.k}: {len(rows)} filas")
    if args.format == "json":
        return {"k": args.k, "validity": VALIDITY, "rows": [row.to_dict() for row in rows]}

    path = emit_table(bound_table_frame(rows), args.format, f"bounds_k{args.k}")
    if path is None:
        return None
    return {"k": args.k, "validity": VALIDITY, "table_file": path}
