# Este proceso calcula la tabla de f_k(n) por enumeración exacta y guarda los testigos

from utils.config import config
from utils.logger import logger
from utils.reports import emit_table
from utils.search import f_table, f_table_frame


def main(args):
    """
    Proceso ftable

    Args:
        args: Argumentos (k, nmax, format)

    Returns:
        dict: Filas de la tabla, metadata del XLSX, o None si se emitió CSV
    """
    logger.info("=" * 60)
    logger.info(f"TABLA DE f_{args.k}(n) PARA n = {args.k}..{args.nmax}")
    logger.info("=" * 60)

    rows = f_table(args.k, args.nmax, output_dir=config.OUTPUT_DIR, progress=True)
    consistent = all(row.within_cap is not False and row.meets_construction is not False for row in rows)
    if consistent:
        logger.success("Todos los valores respetan las cotas conocidas")

    if args.format == "json":
        return {"k": args.k, "n_max": args.nmax, "computed": True, "consistent": consistent,
                "rows": [row.to_dict() for row in rows]}
    path = emit_table(f_table_frame(rows), args.format, f"ftable_k{args.k}")
    if path is None:
        return None
    return {"k": args.k, "n_max": args.nmax, "computed": True, "consistent": consistent, "table_file": path}
