
# parsetab.py
# This file is automatically generated. Do not edit.
# pylint: disable=W,C,R
_tabversion = '3.10'

_lr_method = 'LALR'

_lr_signature = 'BAR CARET CLOSE_BRACKET CLOSE_PAREN COMMA DERIV INTEGER MINUS_OP MULT_OP OPEN_BRACKET OPEN_PAREN PLUS_OP VAR\n    Text : Word\n         | ESeq\n         | Poly\n    \n    Word :\n    \n    Word : Factors\n    \n    Factors : JSeq\n    \n    Factors : Factors JSeq\n    \n    JSeq : DERIV CARET INTEGER OPEN_PAREN IndexList BAR\n    \n    JSeq : DERIV CARET INTEGER BAR IndexList CLOSE_PAREN\n    \n    JSeq : DERIV CARET INTEGER OPEN_PAREN IndexList BAR IndexList CLOSE_PAREN\n    \n    IndexList : INTEGER\n    \n    IndexList : IndexList COMMA INTEGER\n    \n    ESeq : OPEN_PAREN PairList BAR\n    \n    ESeq : BAR PairList CLOSE_PAREN\n    \n    ESeq : OPEN_PAREN PairList BAR PairList CLOSE_PAREN\n    \n    PairList : Pair\n    \n    PairList : PairList COMMA Pair\n    \n    Pair : OPEN_PAREN INTEGER COMMA INTEGER CLOSE_PAREN\n    \n    Poly : Term\n    \n    Poly : MINUS_OP Term\n    \n    Poly : Poly PLUS_OP Term\n         | Poly MINUS_OP Term\n    \n    Term : INTEGER\n    \n    Term : INTEGER MULT_OP Monomial\n    \n    Term : Monomial\n    \n    Monomial : Power\n    \n    Monomial : Monomial MULT_OP Power\n    \n    Power : Variable\n    \n    Power : Variable CARET INTEGER\n    \n    Variable : VAR OPEN_BRACKET INTEGER COMMA INTEGER CLOSE_BRACKET CARET OPEN_PAREN INTEGER CLOSE_PAREN\n    '
    
_lr_action_items = {'$end':([0,1,2,3,4,5,8,10,11,12,14,15,19,24,30,31,33,35,36,37,39,48,54,56,61,64,],[-4,0,-1,-2,-3,-5,-19,-6,-23,-25,-26,-28,-7,-20,-21,-22,-13,-14,-24,-27,-29,-15,-8,-9,-10,-30,]),'OPEN_PAREN':([0,6,7,33,34,38,60,],[6,20,20,20,20,44,62,]),'BAR':([0,21,22,38,43,49,50,53,59,],[7,33,-16,45,-17,-11,54,-18,-12,]),'MINUS_OP':([0,4,8,11,12,14,15,24,30,31,36,37,39,64,],[9,18,-19,-23,-25,-26,-28,-20,-21,-22,-24,-27,-29,-30,]),'INTEGER':([0,9,17,18,20,27,28,29,41,44,45,46,54,55,62,],[11,11,11,11,32,38,39,40,47,49,49,52,49,59,63,]),'DERIV':([0,5,10,19,54,56,61,],[13,13,-6,-7,-8,-9,-10,]),'VAR':([0,9,17,18,25,26,],[16,16,16,16,16,16,]),'PLUS_OP':([4,8,11,12,14,15,24,30,31,36,37,39,64,],[17,-19,-23,-25,-26,-28,-20,-21,-22,-24,-27,-29,-30,]),'MULT_OP':([11,12,14,15,36,37,39,64,],[25,26,-26,-28,26,-27,-29,-30,]),'CARET':([13,15,57,64,],[27,28,60,-30,]),'OPEN_BRACKET':([16,],[29,]),'COMMA':([21,22,23,32,40,42,43,49,50,51,53,58,59,],[34,-16,34,41,46,34,-17,-11,55,55,-18,55,-12,]),'CLOSE_PAREN':([22,23,42,43,47,49,51,53,58,59,63,],[-16,35,48,-17,53,-11,56,-18,61,-12,64,]),'CLOSE_BRACKET':([52,],[57,]),}

_lr_action = {}
for _k, _v in _lr_action_items.items():
   for _x,_y in zip(_v[0],_v[1]):
      if not _x in _lr_action:  _lr_action[_x] = {}
      _lr_action[_x][_k] = _y
del _lr_action_items

_lr_goto_items = {'Text':([0,],[1,]),'Word':([0,],[2,]),'ESeq':([0,],[3,]),'Poly':([0,],[4,]),'Factors':([0,],[5,]),'Term':([0,9,17,18,],[8,24,30,31,]),'JSeq':([0,5,],[10,19,]),'Monomial':([0,9,17,18,25,],[12,12,12,12,36,]),'Power':([0,9,17,18,25,26,],[14,14,14,14,14,37,]),'Variable':([0,9,17,18,25,26,],[15,15,15,15,15,15,]),'PairList':([6,7,33,],[21,23,42,]),'Pair':([6,7,33,34,],[22,22,22,43,]),'IndexList':([44,45,54,],[50,51,58,]),}

_lr_goto = {}
for _k, _v in _lr_goto_items.items():
   for _x, _y in zip(_v[0], _v[1]):
       if not _x in _lr_goto: _lr_goto[_x] = {}
       _lr_goto[_x][_k] = _y
del _lr_goto_items
_lr_productions = [
  ("S' -> Text","S'",1,None,None,None),
  ('Text -> Word','Text',1,'p_text','parserules.py',37),
  ('Text -> ESeq','Text',1,'p_text','parserules.py',38),
  ('Text -> Poly','Text',1,'p_text','parserules.py',39),
  ('Word -> <empty>','Word',0,'p_word_empty','parserules.py',46),
  ('Word -> Factors','Word',1,'p_word_factors','parserules.py',53),
  ('Factors -> JSeq','Factors',1,'p_factors_single','parserules.py',60),
  ('Factors -> Factors JSeq','Factors',2,'p_factors_recursive','parserules.py',67),
  ('JSeq -> DERIV CARET INTEGER OPEN_PAREN IndexList BAR','JSeq',6,'p_jseq_left','parserules.py',78),
  ('JSeq -> DERIV CARET INTEGER BAR IndexList CLOSE_PAREN','JSeq',6,'p_jseq_right','parserules.py',85),
  ('JSeq -> DERIV CARET INTEGER OPEN_PAREN IndexList BAR IndexList CLOSE_PAREN','JSeq',8,'p_jseq_full','parserules.py',92),
  ('IndexList -> INTEGER','IndexList',1,'p_index_list_single','parserules.py',99),
  ('IndexList -> IndexList COMMA INTEGER','IndexList',3,'p_index_list_recursive','parserules.py',106),
  ('ESeq -> OPEN_PAREN PairList BAR','ESeq',3,'p_eseq_left','parserules.py',118),
  ('ESeq -> BAR PairList CLOSE_PAREN','ESeq',3,'p_eseq_right','parserules.py',125),
  ('ESeq -> OPEN_PAREN PairList BAR PairList CLOSE_PAREN','ESeq',5,'p_eseq_full','parserules.py',132),
  ('PairList -> Pair','PairList',1,'p_pair_list_single','parserules.py',139),
  ('PairList -> PairList COMMA Pair','PairList',3,'p_pair_list_recursive','parserules.py',146),
  ('Pair -> OPEN_PAREN INTEGER COMMA INTEGER CLOSE_PAREN','Pair',5,'p_pair','parserules.py',154),
  ('Poly -> Term','Poly',1,'p_poly_single','parserules.py',164),
  ('Poly -> MINUS_OP Term','Poly',2,'p_poly_negated','parserules.py',171),
  ('Poly -> Poly PLUS_OP Term','Poly',3,'p_poly_binary','parserules.py',178),
  ('Poly -> Poly MINUS_OP Term','Poly',3,'p_poly_binary','parserules.py',179),
  ('Term -> INTEGER','Term',1,'p_term_constant','parserules.py',189),
  ('Term -> INTEGER MULT_OP Monomial','Term',3,'p_term_scaled','parserules.py',196),
  ('Term -> Monomial','Term',1,'p_term_monomial','parserules.py',203),
  ('Monomial -> Power','Monomial',1,'p_monomial_single','parserules.py',210),
  ('Monomial -> Monomial MULT_OP Power','Monomial',3,'p_monomial_recursive','parserules.py',217),
  ('Power -> Variable','Power',1,'p_power_single','parserules.py',224),
  ('Power -> Variable CARET INTEGER','Power',3,'p_power_exponent','parserules.py',231),
  ('Variable -> VAR OPEN_BRACKET INTEGER COMMA INTEGER CLOSE_BRACKET CARET OPEN_PAREN INTEGER CLOSE_PAREN','Variable',10,'p_variable','parserules.py',238),
]
