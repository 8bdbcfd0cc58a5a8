# Este proceso enumera los grafos k-críticos sobre n vértices salvo isomorfismo

import os

from utils.config import config
from utils.logger import logger
from utils.search import enumerate_k_critical


def main(args):
    """
    Proceso enumerate

    Args:
        args: Argumentos (n, k, maximum_only, checkpoint, write_witnesses)

    Returns:
        dict: Resultado de la enumeración
    """
    logger.info("=" * 60)
    logger.info(f"ENUMERACIÓN DE GRAFOS {args.k}-CRÍTICOS CON n={args.n}")
    logger.info("=" * 60)

    result = enumerate_k_critical(args.n, args.k, maximum_only=args.maximum_only,
                                  checkpoint=args.checkpoint, progress=True)
    document = result.to_dict()

    files = []
    if args.write_witnesses and result.witnesses:
        os.makedirs(config.OUTPUT_DIR, exist_ok=True)
        for i, key in enumerate(result.witnesses):
            path = os.path.join(config.OUTPUT_DIR, f"critical_k{args.k}_n{args.n}_{i}.g6")
            with open(path, "w", encoding="ascii") as fh:
                fh.write(key + "\n")
            files.append(path)
    document["witness_files"] = files

    logger.info(f"Grafos encontrados: {len(result.graphs)}")
    logger.info(f"f_{args.k}({args.n}) = {result.f_value}")
    return document
