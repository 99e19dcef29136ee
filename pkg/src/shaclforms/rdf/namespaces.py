"""Namespace IRIs used throughout the package."""

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
XSD = "http://www.w3.org/2001/XMLSchema#"
SH = "http://www.w3.org/ns/shacl#"

RDF_TYPE = RDF + "type"
RDF_FIRST = RDF + "first"
RDF_REST = RDF + "rest"
RDF_NIL = RDF + "nil"

RDFS_SUBCLASS_OF = RDFS + "subClassOf"

XSD_STRING = XSD + "string"
XSD_INTEGER = XSD + "integer"
XSD_DECIMAL = XSD + "decimal"
XSD_BOOLEAN = XSD + "boolean"
XSD_DATE = XSD + "date"
XSD_DATETIME = XSD + "dateTime"
XSD_ANYURI = XSD + "anyURI"

SH_NODE_SHAPE = SH + "NodeShape"
SH_PROPERTY_SHAPE = SH + "PropertyShape"
SH_TARGET_CLASS = SH + "targetClass"
SH_PROPERTY = SH + "property"
SH_PATH = SH + "path"
SH_MIN_COUNT = SH + "minCount"
SH_MAX_COUNT = SH + "maxCount"
SH_MIN_VALUE = SH + "minValue"
SH_MAX_VALUE = SH + "maxValue"
SH_IN = SH + "in"
SH_DATATYPE = SH + "datatype"
SH_CLASS = SH + "class"
SH_NODE_KIND = SH + "nodeKind"
SH_PATTERN = SH + "pattern"
SH_HAS_VALUE = SH + "hasValue"
SH_OR = SH + "or"
SH_AND = SH + "and"
SH_NOT = SH + "not"
SH_XONE = SH + "xone"
SH_SPARQL = SH + "sparql"
SH_NODE = SH + "node"

SH_IRI_KIND = SH + "IRI"
SH_LITERAL_KIND = SH + "Literal"
SH_BLANK_NODE_KIND = SH + "BlankNode"
SH_BLANK_OR_IRI_KIND = SH + "BlankNodeOrIRI"
SH_BLANK_OR_LITERAL_KIND = SH + "BlankNodeOrLiteral"
SH_IRI_OR_LITERAL_KIND = SH + "IRIOrLiteral"
