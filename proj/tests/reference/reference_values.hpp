// Generated by generate_reference.py (mpmath, 60 digits). Do not edit.
#pragma once

namespace tunneling::reference {

// Relativistic: u = 2*pi, mc^2/V0 = 0.98. Non-relativistic: same u and mass ratio.
// Super-relativistic: u = 2*pi, V0/mc^2 = 0.98. Times are in units of a/c.

inline constexpr double kRelHalfKa = 5.2957971889164639205;
inline constexpr double kRelHalfQa = 5.2957971889164639205;
inline constexpr double kRelHalfXi = 2.5851885811290440558;
inline constexpr double kRelHalfEprime = 1.2925942905645220279;
inline constexpr double kRelHalfFRe = 0.004540123235305538113;
inline constexpr double kRelHalfFIm = 0.0049901836854963353312;
inline constexpr double kRelHalfBRe = 0.73965812827058758979;
inline constexpr double kRelHalfBIm = -0.67294898664835229891;
inline constexpr double kRelHalfCRe = -0.000020953847547151191918;
inline constexpr double kRelHalfCIm = 0.000041923668143478411051;
inline constexpr double kRelHalfDRe = 1.739679082118134741;
inline constexpr double kRelHalfDIm = -0.67299091031649577732;
inline constexpr double kRelHalfDwellQuadrature = 0.05595451076034604521;
inline constexpr double kRelHalfDwell = 0.05595451076034604521;
inline constexpr double kRelHalfSelfInterference = 0.28958860537693120875;
inline constexpr double kRelHalfSelfInterferenceFromGamma = 0.28958860537693120875;
inline constexpr double kRelHalfWideDwell = 0.056008918599343797779;
inline constexpr double kRelHalfWideSelfInterference = 0.28958723360881943626;
inline constexpr double kRelHalfComposition = -0.33288975732505022756;
inline constexpr double kRelHalfPhaseDerivT = -2.0916080321353337115;
inline constexpr double kRelXiOneEps = 0.80293291266824980411;
inline constexpr double kRelXiOnePhaseDerivT = -3.8978669853654485162;
inline constexpr double kSensitivityLhs3 = 2.20658177162761708;
inline constexpr double kSensitivityRhs3 = -1.8826056265063487257;
inline constexpr double kSensitivityLhs5 = 0.91725647505477346072;
inline constexpr double kSensitivityRhs5 = -1.1852949631673464737;
inline constexpr double kSensitivityLhs7 = 0.33346185247151522209;
inline constexpr double kSensitivityRhs7 = -0.75195201006500091706;
inline constexpr double kNonRelDwell03 = 0.052095903624802962942;
inline constexpr double kNonRelDwellQuadrature03 = 0.052095903624802962942;
inline constexpr double kNonRelSelfInterference03 = 0.24311305739662315039;
inline constexpr double kNonRelComposition03 = 0.34730486464622907628;
inline constexpr double kNonRelHalfPhaseDerivT = 1.9999841728196805898;
inline constexpr double kSuperHalfDwellUp = 0.19814668766887685005;
inline constexpr double kSuperHalfDwellUpQuadrature = 0.19814668766887685005;
inline constexpr double kSuperHalfSelfInterference = 0.15915396599909787153;
inline constexpr double kSuperHalfWideDwellUp = 0.19814790414940969303;
inline constexpr double kSuperHalfWideSelfInterference = 0.15915494309189533577;

}  // namespace tunneling::reference
