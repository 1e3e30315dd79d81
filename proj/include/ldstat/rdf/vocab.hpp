#pragma once

#include <string_view>

// IRIs of the vocabularies the toolkit understands natively.
namespace ldstat::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kVoid = "http://rdfs.org/ns/void#";
inline constexpr std::string_view kScovo = "http://purl.org/NET/scovo#";
inline constexpr std::string_view kGnDefaultBase = "http://purl.org/gn#";

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfValue = "http://www.w3.org/1999/02/22-rdf-syntax-ns#value";
inline constexpr std::string_view kRdfNil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";

inline constexpr std::string_view kRdfsDomain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view kRdfsRange = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view kRdfsSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfsSubPropertyOf = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";

inline constexpr std::string_view kOwlInverseOf = "http://www.w3.org/2002/07/owl#inverseOf";
inline constexpr std::string_view kOwlSymmetricProperty = "http://www.w3.org/2002/07/owl#SymmetricProperty";
inline constexpr std::string_view kOwlTransitiveProperty = "http://www.w3.org/2002/07/owl#TransitiveProperty";
inline constexpr std::string_view kOwlImports = "http://www.w3.org/2002/07/owl#imports";

inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";

inline constexpr std::string_view kVoidDataset = "http://rdfs.org/ns/void#Dataset";
inline constexpr std::string_view kVoidStatItem = "http://rdfs.org/ns/void#statItem";
inline constexpr std::string_view kVoidTriples = "http://rdfs.org/ns/void#triples";
inline constexpr std::string_view kVoidDataDump = "http://rdfs.org/ns/void#dataDump";
inline constexpr std::string_view kVoidUriSpace = "http://rdfs.org/ns/void#uriSpace";

inline constexpr std::string_view kScovoDimension = "http://purl.org/NET/scovo#dimension";

}  // namespace ldstat::vocab
