"""
Emisión de documentos: JSON (validado contra schemas/), CSV y XLSX
"""

import json
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional, TextIO

import jsonschema
import pandas as pd

from utils.config import config
from utils.errors import Graph6ParseError, UsageError
from utils.graph import Graph, from_graph6
from utils.graph.graph6 import HEADER
from utils.logger import logger

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"


def build_document(command: str, result: Optional[Dict[str, Any]] = None,
                   error: Optional[Dict[str, Any]] = None,
                   partial: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    Documento JSON de un comando con los campos comunes command, seed y ok

    Args:
        command (str): Subcomando ejecutado
        result (dict): Resultado en caso de éxito
        error (dict): Error serializado en caso de fallo
        partial (dict): Reporte parcial (p. ej. presupuesto agotado)

    Returns:
        dict: Documento listo para serializar
    """
    document: Dict[str, Any] = {"command": command, "seed": config.SEED, "ok": error is None}
    if error is None:
        document["result"] = result if result is not None else {}
    else:
        document["error"] = error
        if partial is not None:
            document["partial"] = partial
    return document


def load_schema(command: str) -> Dict[str, Any]:
    path = SCHEMA_DIR / f"{command}.schema.json"
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def validate_document(document: Dict[str, Any]) -> None:
    """
    Valida un documento contra schemas/<command>.schema.json

    Raises:
        jsonschema.ValidationError: Si el documento no cumple el esquema
    """
    jsonschema.validate(instance=document, schema=load_schema(document["command"]))


def dumps(document: Dict[str, Any]) -> str:
    """Serialización determinista: claves ordenadas, sin espacios variables"""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)


def emit_json(document: Dict[str, Any], stream: Optional[TextIO] = None) -> None:
    """Valida el documento ya serializado y lo escribe en stdout"""
    text = dumps(document)
    validate_document(json.loads(text))
    stream = stream or sys.stdout
    stream.write(text + "\n")
    stream.flush()


def emit_table(frame: pd.DataFrame, fmt: str, name: str, stream: Optional[TextIO] = None) -> Optional[str]:
    """
    Escribe una tabla en CSV (stdout) o XLSX (archivo en el directorio de salida)

    Args:
        frame (pd.DataFrame): Tabla
        fmt (str): 'csv' o 'xlsx'
        name (str): Nombre base del archivo XLSX
        stream (TextIO): Destino del CSV

    Returns:
        str: Ruta del XLSX escrito, o None para CSV
    """
    if fmt == "csv":
        stream = stream or sys.stdout
        frame.to_csv(stream, index=False, lineterminator="\n")
        return None
    if fmt == "xlsx":
        os.makedirs(config.OUTPUT_DIR, exist_ok=True)
        path = os.path.join(config.OUTPUT_DIR, f"{name}.xlsx")
        frame.to_excel(path, index=False, engine="openpyxl")
        logger.info(f"Tabla guardada en {path}")
        return path
    raise UsageError(f"Formato de tabla no soportado: {fmt}", {"format": fmt})


def read_input_graph(graph: Optional[str] = None, file: Optional[str] = None,
                     stream: Optional[TextIO] = None) -> Graph:
    """
    Lee el grafo de entrada en graph6: cadena en línea, archivo o stdin

    Args:
        graph (str): Cadena graph6 pasada con --graph
        file (str): Ruta pasada con --file
        stream (TextIO): Entrada alternativa (stdin por defecto)

    Returns:
        Graph: Grafo leído

    Raises:
        UsageError: Si hay dos fuentes, el archivo no existe o no hay exactamente un grafo
        Graph6ParseError: Si la entrada no es graph6 válido (incluidos bytes no ASCII)
    """
    if graph is not None and file is not None:
        raise UsageError("Use --graph o --file, no ambos")
    if graph is not None:
        text = graph
    elif file is not None:
        try:
            with open(file, "r", encoding="ascii") as fh:
                text = fh.read()
        except UnicodeDecodeError as e:
            raise Graph6ParseError(f"Byte no ASCII en {file}", e.start)
        except OSError as e:
            raise UsageError(f"No se pudo leer {file}: {e}", {"file": file})
    else:
        try:
            text = (stream or sys.stdin).read()
        except UnicodeDecodeError as e:
            raise Graph6ParseError("Byte no ASCII en la entrada", e.start)
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if lines and lines[0] == HEADER:
        lines = lines[1:]
    if len(lines) != 1:
        raise UsageError(f"Se esperaba exactamente un grafo graph6, se leyeron {len(lines)} líneas")
    return from_graph6(lines[0])
