from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], jobs: int = 1,
                chunksize: int = 1) -> Iterator[R]:
    """
    Aplica `func` a cada elemento conservando el orden de entrada

    Con jobs > 1 reparte el trabajo en un Pool de procesos; el resultado se
    consume en el mismo orden, de modo que la salida no depende de `jobs`.
    `func` debe ser una función de módulo (serializable con pickle).

    Args:
        func (Callable): Función a aplicar
        items (Iterable): Entradas
        jobs (int): Número de procesos
        chunksize (int): Tamaño de lote para el Pool

    Yields:
        Resultados en orden de entrada
    """
    if jobs <= 1:
        for item in items:
            yield func(item)
        return
    with Pool(processes=jobs) as pool:
        for result in pool.imap(func, items, chunksize=chunksize):
            yield result
